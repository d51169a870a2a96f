//! Decorated trees for strata of the strip-shrinking spaces: each vertex has
//! one of six scales, one mid-scale vertex is distinguished, and leaves carry
//! colors.
//!
//! Text format: a vertex is `(TAG[*][#label] child ...)` where `TAG` is one
//! of `L M S SL SM SS` and a child is either a nested vertex or a leaf color
//! (a positive integer). `*` marks the distinguished vertex; `#label` names
//! the finite edge leaving the vertex. Example: `(L (M*#1) (M#3 (SM#2 1 1)))`.

use std::fmt;

use super::OperadError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scale {
    Large,
    Mid,
    Small,
    SmallLarge,
    SmallMid,
    SmallSmall,
}

impl Scale {
    pub fn tag(self) -> &'static str {
        match self {
            Scale::Large => "L",
            Scale::Mid => "M",
            Scale::Small => "S",
            Scale::SmallLarge => "SL",
            Scale::SmallMid => "SM",
            Scale::SmallSmall => "SS",
        }
    }

    pub fn from_tag(s: &str) -> Option<Scale> {
        Some(match s {
            "L" => Scale::Large,
            "M" => Scale::Mid,
            "S" => Scale::Small,
            "SL" => Scale::SmallLarge,
            "SM" => Scale::SmallMid,
            "SS" => Scale::SmallSmall,
            _ => return None,
        })
    }

    /// Scales of the bubbles above mid-scale vertices to the right of the
    /// distinguished one, in the color that is being merged.
    fn is_merging(self) -> bool {
        matches!(self, Scale::SmallLarge | Scale::SmallMid | Scale::SmallSmall)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Child {
    Vertex(usize),
    Leaf(u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub scale: Scale,
    pub label: Option<String>,
    pub parent: Option<usize>,
    pub children: Vec<Child>,
}

/// Arena-allocated decorated tree; vertex 0 is the root and vertex indices
/// follow preorder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecoratedTree {
    vertices: Vec<Vertex>,
    distinguished: usize,
}

impl DecoratedTree {
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn distinguished(&self) -> usize {
        self.distinguished
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Finite edges, indexed by their source vertex (every non-root vertex).
    pub fn edges(&self) -> Vec<usize> {
        (1..self.vertices.len()).collect()
    }

    /// Name of the edge leaving vertex `v`: its label, or `e{v}`.
    pub fn edge_name(&self, v: usize) -> String {
        self.vertices[v].label.clone().unwrap_or_else(|| format!("e{v}"))
    }

    pub fn edge_by_name(&self, name: &str) -> Option<usize> {
        (1..self.vertices.len()).find(|&v| self.edge_name(v) == name)
    }

    /// Vertices from `v` down to the root, inclusive.
    pub fn path_to_root(&self, mut v: usize) -> Vec<usize> {
        let mut out = vec![v];
        while let Some(p) = self.vertices[v].parent {
            out.push(p);
            v = p;
        }
        out
    }

    /// Lowest common ancestor.
    pub fn meet(&self, a: usize, b: usize) -> usize {
        let pa = self.path_to_root(a);
        let pb = self.path_to_root(b);
        *pa.iter().find(|v| pb.contains(v)).expect("rooted tree")
    }

    /// Signed edge sum along the path from the distinguished vertex to `v`:
    /// `+1` for edges traversed toward the root, `-1` for edges traversed away.
    pub fn path_vector(&self, v: usize) -> Vec<i64> {
        let mut out = vec![0i64; self.vertices.len()];
        let top = self.meet(self.distinguished, v);
        let mut x = self.distinguished;
        while x != top {
            out[x] += 1;
            x = self.vertices[x].parent.expect("below meet");
        }
        let mut y = v;
        while y != top {
            out[y] -= 1;
            y = self.vertices[y].parent.expect("below meet");
        }
        out
    }

    /// Turning point of a vertex: where the path from the distinguished
    /// vertex stops following the edge orientation.
    pub fn turning_point(&self, v: usize) -> usize {
        self.meet(self.distinguished, v)
    }

    fn count(&self, pred: impl Fn(Scale) -> bool) -> usize {
        self.vertices.iter().filter(|v| pred(v.scale)).count()
    }

    /// Number of vertices that are neither mid-scale nor small-mid scale.
    pub fn free_vertex_count(&self) -> usize {
        self.count(|s| !matches!(s, Scale::Mid | Scale::SmallMid))
    }

    pub fn parse(text: &str) -> Result<Self, OperadError> {
        let tokens = tokenize(text);
        let mut pos = 0;
        let mut vertices = Vec::new();
        let mut starred = Vec::new();
        parse_vertex(&tokens, &mut pos, None, &mut vertices, &mut starred)?;
        if pos != tokens.len() {
            return Err(OperadError::Parse(format!("trailing input after token {pos}")));
        }
        let distinguished = match starred.as_slice() {
            [v] => *v,
            _ => return Err(OperadError::Decoration(format!("{} distinguished vertices, need exactly one", starred.len()))),
        };
        let t = DecoratedTree { vertices, distinguished };
        t.validate()?;
        Ok(t)
    }

    /// Checks the scale rules: large vertices only below large vertices, mid
    /// vertices directly above large ones (or at the root), small bubbles of
    /// a single kind stacked on mid vertices, merging bubbles only to the
    /// right of the distinguished vertex, and a large turning point for every
    /// small-mid vertex.
    pub fn validate(&self) -> Result<(), OperadError> {
        let bad = |v: usize, why: &str| Err(OperadError::Decoration(format!("vertex {v} ({}): {why}", self.vertices[v].scale.tag())));
        if self.vertices[self.distinguished].scale != Scale::Mid {
            return bad(self.distinguished, "distinguished vertex must be mid-scale");
        }
        let mids: Vec<usize> = (0..self.vertices.len()).filter(|&v| self.vertices[v].scale == Scale::Mid).collect();
        for (v, vx) in self.vertices.iter().enumerate() {
            let parent = vx.parent.map(|p| self.vertices[p].scale);
            let n = vx.children.len();
            match vx.scale {
                Scale::Large => {
                    if !matches!(parent, None | Some(Scale::Large)) {
                        return bad(v, "large vertex above a non-large vertex");
                    }
                    if n < 2 {
                        return bad(v, "large vertex needs at least two inputs");
                    }
                    if vx.children.iter().any(|c| matches!(c, Child::Leaf(_))) {
                        return bad(v, "leaves must reach a mid-scale vertex");
                    }
                }
                Scale::Mid => {
                    if !matches!(parent, None | Some(Scale::Large)) {
                        return bad(v, "mid vertex above a non-large vertex");
                    }
                }
                Scale::Small => {
                    if !matches!(parent, Some(Scale::Mid) | Some(Scale::Small)) {
                        return bad(v, "small vertex must sit above a mid or small vertex");
                    }
                    if n < 2 {
                        return bad(v, "small vertex needs at least two inputs");
                    }
                }
                Scale::SmallLarge => {
                    if !matches!(parent, Some(Scale::Mid) | Some(Scale::SmallLarge)) {
                        return bad(v, "small-large vertex must sit above a mid or small-large vertex");
                    }
                    if n < 2 {
                        return bad(v, "small-large vertex needs at least two inputs");
                    }
                }
                Scale::SmallMid => {
                    if !matches!(parent, Some(Scale::Mid) | Some(Scale::SmallLarge)) {
                        return bad(v, "small-mid vertex must sit above a mid or small-large vertex");
                    }
                    if n == 0 {
                        return bad(v, "small-mid vertex needs an input");
                    }
                }
                Scale::SmallSmall => {
                    if !matches!(parent, Some(Scale::SmallMid) | Some(Scale::SmallSmall)) {
                        return bad(v, "small-small vertex must sit above a small-mid or small-small vertex");
                    }
                    if n < 2 {
                        return bad(v, "small-small vertex needs at least two inputs");
                    }
                }
            }
            if vx.scale.is_merging() {
                let mid = *self.path_to_root(v).iter().find(|&&u| self.vertices[u].scale == Scale::Mid).expect("checked");
                if mid <= self.distinguished {
                    return bad(v, "merging bubbles only occur to the right of the distinguished vertex");
                }
            }
            if vx.scale == Scale::SmallMid && self.vertices[self.turning_point(v)].scale != Scale::Large {
                return bad(v, "turning point must be large-scale");
            }
        }
        for &m in &mids {
            if m != self.distinguished && self.path_to_root(m).contains(&self.distinguished) {
                return bad(m, "mid vertices cannot be stacked");
            }
        }
        Ok(())
    }
}

fn tokenize(text: &str) -> Vec<String> {
    text.replace('(', " ( ").replace(')', " ) ").split_whitespace().map(str::to_string).collect()
}

fn parse_vertex(
    tokens: &[String],
    pos: &mut usize,
    parent: Option<usize>,
    vertices: &mut Vec<Vertex>,
    starred: &mut Vec<usize>,
) -> Result<usize, OperadError> {
    let err = |m: String| OperadError::Parse(m);
    if tokens.get(*pos).map(String::as_str) != Some("(") {
        return Err(err(format!("expected '(' at token {}", *pos)));
    }
    *pos += 1;
    let head = tokens.get(*pos).ok_or_else(|| err("unexpected end of input".into()))?.clone();
    *pos += 1;
    let (head, label) = match head.split_once('#') {
        Some((h, l)) if !l.is_empty() => (h.to_string(), Some(l.to_string())),
        Some(_) => return Err(err(format!("empty label in '{head}'"))),
        None => (head, None),
    };
    let (tag, star) = match head.strip_suffix('*') {
        Some(t) => (t, true),
        None => (head.as_str(), false),
    };
    let scale = Scale::from_tag(tag).ok_or_else(|| err(format!("unknown scale '{tag}'")))?;
    let id = vertices.len();
    vertices.push(Vertex { scale, label, parent, children: Vec::new() });
    if star {
        starred.push(id);
    }
    loop {
        match tokens.get(*pos).map(String::as_str) {
            None => return Err(err("unclosed vertex".into())),
            Some(")") => {
                *pos += 1;
                return Ok(id);
            }
            Some("(") => {
                let c = parse_vertex(tokens, pos, Some(id), vertices, starred)?;
                vertices[id].children.push(Child::Vertex(c));
            }
            Some(tok) => {
                let color: u32 = tok.parse().map_err(|_| err(format!("bad leaf '{tok}'")))?;
                if color == 0 {
                    return Err(err("leaf colors start at 1".into()));
                }
                vertices[id].children.push(Child::Leaf(color));
                *pos += 1;
            }
        }
    }
}

impl fmt::Display for DecoratedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn rec(t: &DecoratedTree, v: usize, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            let vx = &t.vertices[v];
            write!(f, "({}", vx.scale.tag())?;
            if v == t.distinguished {
                write!(f, "*")?;
            }
            if let Some(l) = &vx.label {
                write!(f, "#{l}")?;
            }
            for c in &vx.children {
                match c {
                    Child::Leaf(k) => write!(f, " {k}")?,
                    Child::Vertex(u) => {
                        write!(f, " ")?;
                        rec(t, *u, f)?;
                    }
                }
            }
            write!(f, ")")
        }
        rec(self, 0, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_roundtrip() {
        let text = "(L (M*#1) (M#3 (SM#2 1 1)))";
        let t = DecoratedTree::parse(text).unwrap();
        assert_eq!(t.to_string(), text);
        assert_eq!(t.vertex_count(), 4);
        assert_eq!(t.distinguished(), 1);
        assert_eq!(t.edge_by_name("2"), Some(3));
        assert_eq!(t.turning_point(3), 0);
        assert_eq!(t.free_vertex_count(), 1);
    }

    #[test]
    fn path_vectors() {
        let t = DecoratedTree::parse("(L (M*#1) (M#3 (SM#2 1 1)))").unwrap();
        assert_eq!(t.path_vector(3), vec![0, 1, -1, -1]);
        assert_eq!(t.path_vector(0), vec![0, 1, 0, 0]);
    }

    #[test]
    fn rejects_bad_decorations() {
        for bad in [
            "(L (M#1) (M (SM 1 1)))",
            "(L (M*) (M*))",
            "(M* (L (M 1) (M 1)))",
            "(L (M* (SM 1 1)) (M 1))",
            "(L (M (SM 1 1)) (M*))",
            "(L (M*) (M (SS 1 1)))",
            "(L (M*) 1)",
            "(L (M*) (M (S 1)))",
            "(Q (M*))",
            "(L (M*) (M 1)",
        ] {
            assert!(DecoratedTree::parse(bad).is_err(), "{bad}");
        }
    }
}
