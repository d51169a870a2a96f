//! Random valid decorated trees for property tests.

use rand::Rng;

use super::decorated::DecoratedTree;

fn leaf(rng: &mut impl Rng, colors: u32) -> String {
    rng.gen_range(1..=colors).to_string()
}

fn bubble(rng: &mut impl Rng, tag: &str, inner: Option<&str>, color: u32, depth: usize) -> String {
    let n = rng.gen_range(2..=3);
    let mut s = format!("({tag}");
    for _ in 0..n {
        match inner {
            Some(t) if depth > 0 && rng.gen_bool(0.3) => s += &format!(" {}", bubble(rng, t, Some(t), color, depth - 1)),
            _ => s += &format!(" {color}"),
        }
    }
    s + ")"
}

/// Contents of a mid-scale vertex; `merging` allows the bubbles that only
/// occur to the right of the distinguished vertex.
fn mid(rng: &mut impl Rng, star: bool, merging: bool, colors: u32) -> String {
    let mut s = if star { "(M*".to_string() } else { "(M".to_string() };
    let n = rng.gen_range(if star { 0 } else { 1 }..=3);
    for _ in 0..n {
        let c = rng.gen_range(1..=colors);
        let item = match rng.gen_range(0..4) {
            0 => bubble(rng, "S", Some("S"), c, 1),
            1 | 2 if merging => {
                if rng.gen_bool(0.5) {
                    bubble(rng, "SM", Some("SS"), c, 1)
                } else {
                    let mut t = "(SL".to_string();
                    for _ in 0..rng.gen_range(2..=3) {
                        t += " ";
                        t += &match rng.gen_range(0..3) {
                            0 => bubble(rng, "SM", Some("SS"), c, 1),
                            1 => "(SM ".to_string() + &c.to_string() + ")",
                            _ => c.to_string(),
                        };
                    }
                    t + ")"
                }
            }
            _ => leaf(rng, colors),
        };
        s += " ";
        s += &item;
    }
    s + ")"
}

/// Large-scale tree with `m` mid-scale leaves; returns the text with
/// placeholders `@k` for the mids.
fn large(rng: &mut impl Rng, m: usize, next: &mut usize) -> String {
    if m == 1 {
        *next += 1;
        return format!("@{}", *next - 1);
    }
    let parts = rng.gen_range(2..=m.min(3));
    let mut sizes = vec![1; parts];
    for _ in parts..m {
        let k = rng.gen_range(0..parts);
        sizes[k] += 1;
    }
    let mut s = "(L".to_string();
    for sz in sizes {
        s += " ";
        s += &large(rng, sz, next);
    }
    s + ")"
}

/// A random decorated tree satisfying the scale rules, with at most
/// `max_edges` finite edges and at least one.
pub fn random_decorated_tree(rng: &mut impl Rng, max_edges: usize) -> DecoratedTree {
    loop {
        let t = attempt(rng);
        if (2..=max_edges + 1).contains(&t.vertex_count()) {
            return t;
        }
    }
}

fn attempt(rng: &mut impl Rng) -> DecoratedTree {
    let colors = rng.gen_range(1..=3);
    let m = rng.gen_range(1..=4);
    let mut next = 0;
    let mut text = large(rng, m, &mut next);
    let star = rng.gen_range(0..m);
    for k in 0..m {
        let body = mid(rng, k == star, m > 1 && k > star, colors);
        text = text.replacen(&format!("@{k}"), &body, 1);
    }
    DecoratedTree::parse(&text).unwrap_or_else(|e| panic!("generated invalid tree {text}: {e}"))
}
