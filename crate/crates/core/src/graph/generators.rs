//! Named graph families with fixed vertex numbering.
//!
//! | family | vertices | numbering |
//! |---|---|---|
//! | `complete(n)` | n | |
//! | `complete_minus_edge(n)` | n | the missing edge is `{0, 1}` |
//! | `path(n)` | n | `0 - 1 - .. - n-1` |
//! | `cycle(n)` | n | `i ~ i+1 mod n` |
//! | `complete_bipartite(a, b)` | a + b | sides `0..a` and `a..a+b` |
//! | `cocktail_party(m)` | 2m | `i` and `i+m` are the non-adjacent pairs |
//! | `bowtie` | 5 | triangles `{0,1,4}`, `{2,3,4}`; centre 4 |
//! | `kite(r, s)` | r + s - 1 | clique `0..s`; path `0 - s - s+1 - .. - s+r-2` |
//! | `petersen` | 10 | outer cycle `0..5`, inner pentagram `5..10`, spokes `i ~ i+5` |
//! | `join(G, H)` | nG + nH | G first, then H shifted by nG |
//! | `cartesian_product(G, H)` | nG * nH | `(g, h) -> g * nH + h` |
//! | `double_cover(G)` | 2 nG | `u` and `u + nG` are the two copies of `u` |
//!
//! The kite's path has `r` vertices counting the attachment vertex, which it
//! shares with the clique.

use std::fmt;

use super::Graph;
use crate::error::{input, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Complete(usize),
    CompleteMinusEdge(usize),
    Path(usize),
    Cycle(usize),
    CompleteBipartite(usize, usize),
    CocktailParty(usize),
    Bowtie,
    Kite { r: usize, s: usize },
    Petersen,
    Join(Box<Family>, Box<Family>),
    CartesianProduct(Box<Family>, Box<Family>),
    DoubleCover(Box<Family>),
}

impl Family {
    pub fn build(&self) -> Result<Graph> {
        match *self {
            Family::Complete(n) => {
                at_least("complete", "n", n, 1)?;
                Ok(complete(n))
            }
            Family::CompleteMinusEdge(n) => {
                at_least("complete_minus_edge", "n", n, 2)?;
                let edges: Vec<_> = pairs(n).filter(|&p| p != (0, 1)).collect();
                Graph::from_edge_list(n, &edges)
            }
            Family::Path(n) => {
                at_least("path", "n", n, 1)?;
                Graph::from_edge_list(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>())
            }
            Family::Cycle(n) => {
                at_least("cycle", "n", n, 3)?;
                Graph::from_edge_list(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
            }
            Family::CompleteBipartite(a, b) => {
                at_least("complete_bipartite", "a", a, 1)?;
                at_least("complete_bipartite", "b", b, 1)?;
                let edges: Vec<_> = (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))).collect();
                Graph::from_edge_list(a + b, &edges)
            }
            Family::CocktailParty(m) => {
                at_least("cocktail_party", "m", m, 1)?;
                let n = 2 * m;
                let edges: Vec<_> = pairs(n).filter(|&(i, j)| j != i + m).collect();
                Graph::from_edge_list(n, &edges)
            }
            Family::Bowtie => {
                Graph::from_edge_list(5, &[(0, 1), (0, 4), (1, 4), (2, 3), (2, 4), (3, 4)])
            }
            Family::Kite { r, s } => {
                at_least("kite", "r", r, 1)?;
                at_least("kite", "s", s, 3)?;
                let n = r + s - 1;
                let mut edges: Vec<_> = pairs(s).collect();
                let mut prev = 0;
                for v in s..n {
                    edges.push((prev, v));
                    prev = v;
                }
                Graph::from_edge_list(n, &edges)
            }
            Family::Petersen => {
                let mut edges = Vec::new();
                for i in 0..5 {
                    edges.push((i, (i + 1) % 5));
                    edges.push((5 + i, 5 + (i + 2) % 5));
                    edges.push((i, i + 5));
                }
                Graph::from_edge_list(10, &edges)
            }
            Family::Join(ref g, ref h) => Ok(join(&g.build()?, &h.build()?)),
            Family::CartesianProduct(ref g, ref h) => Ok(cartesian_product(&g.build()?, &h.build()?)),
            Family::DoubleCover(ref g) => Ok(double_cover(&g.build()?)),
        }
    }
}

fn at_least(family: &str, name: &str, value: usize, min: usize) -> Result<()> {
    if value < min {
        Err(input(format!("{family}: {name} must be at least {min}, got {value}")))
    } else {
        Ok(())
    }
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

fn complete(n: usize) -> Graph {
    Graph::from_edge_list(n, &pairs(n).collect::<Vec<_>>()).expect("complete graph edges are valid")
}

/// Every vertex of `g` adjacent to every vertex of `h`.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let (ng, nh) = (g.n(), h.n());
    let mut edges = g.edges();
    edges.extend(h.edges().into_iter().map(|(u, v)| (u + ng, v + ng)));
    edges.extend((0..ng).flat_map(|u| (0..nh).map(move |v| (u, v + ng))));
    Graph::from_edge_list(ng + nh, &edges).expect("join edges are valid")
}

pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let nh = h.n();
    let mut edges = Vec::new();
    for (a, b) in g.edges() {
        for x in 0..nh {
            edges.push((a * nh + x, b * nh + x));
        }
    }
    for (x, y) in h.edges() {
        for a in 0..g.n() {
            edges.push((a * nh + x, a * nh + y));
        }
    }
    Graph::from_edge_list(g.n() * nh, &edges).expect("product edges are valid")
}

/// Bipartite lift: `u ~ w + n` and `w ~ u + n` for every edge `uw`.
pub fn double_cover(g: &Graph) -> Graph {
    let n = g.n();
    let edges: Vec<_> = g.edges().into_iter().flat_map(|(u, w)| [(u, w + n), (w, u + n)]).collect();
    Graph::from_edge_list(2 * n, &edges).expect("double cover edges are valid")
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::CompleteMinusEdge(n) => write!(f, "complete_minus_edge:{n}"),
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::CompleteBipartite(a, b) => write!(f, "complete_bipartite:{a},{b}"),
            Family::CocktailParty(m) => write!(f, "cocktail_party:{m}"),
            Family::Bowtie => write!(f, "bowtie"),
            Family::Kite { r, s } => write!(f, "kite:{r},{s}"),
            Family::Petersen => write!(f, "petersen"),
            Family::Join(g, h) => write!(f, "join:{g},{h}"),
            Family::CartesianProduct(g, h) => write!(f, "cartesian_product:{g},{h}"),
            Family::DoubleCover(g) => write!(f, "double_cover:{g}"),
        }
    }
}

/// Parses the generator grammar `family[:arg,arg,..]`, where graph-valued
/// arguments (for `join`, `cartesian_product`, `double_cover`) are themselves
/// generator specs, e.g. `join:cocktail_party:3,complete:2`.
pub fn parse_family(spec: &str) -> Result<Family> {
    let mut p = SpecParser { s: spec.trim().as_bytes(), pos: 0 };
    let fam = p.family()?;
    if p.pos != p.s.len() {
        return Err(input(format!("unexpected trailing text at position {} in {spec:?}", p.pos)));
    }
    Ok(fam)
}

struct SpecParser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl SpecParser<'_> {
    fn ident(&mut self) -> Result<String> {
        let start = self.pos;
        while self.pos < self.s.len() && (self.s[self.pos].is_ascii_alphabetic() || self.s[self.pos] == b'_') {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(input(format!("expected a family name at position {start}")));
        }
        Ok(String::from_utf8_lossy(&self.s[start..self.pos]).into_owned())
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.s.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(input(format!("expected {:?} at position {}", c as char, self.pos)))
        }
    }

    fn int(&mut self) -> Result<usize> {
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .ok()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| input(format!("expected an integer at position {start}")))
    }

    fn ints<const K: usize>(&mut self) -> Result<[usize; K]> {
        let mut out = [0; K];
        self.expect(b':')?;
        for (i, slot) in out.iter_mut().enumerate() {
            if i > 0 {
                self.expect(b',')?;
            }
            *slot = self.int()?;
        }
        Ok(out)
    }

    fn family(&mut self) -> Result<Family> {
        let name = self.ident()?;
        Ok(match name.as_str() {
            "complete" => Family::Complete(self.ints::<1>()?[0]),
            "complete_minus_edge" => Family::CompleteMinusEdge(self.ints::<1>()?[0]),
            "path" => Family::Path(self.ints::<1>()?[0]),
            "cycle" => Family::Cycle(self.ints::<1>()?[0]),
            "complete_bipartite" => {
                let [a, b] = self.ints::<2>()?;
                Family::CompleteBipartite(a, b)
            }
            "cocktail_party" => Family::CocktailParty(self.ints::<1>()?[0]),
            "bowtie" => Family::Bowtie,
            "kite" => {
                let [r, s] = self.ints::<2>()?;
                Family::Kite { r, s }
            }
            "petersen" => Family::Petersen,
            "join" | "cartesian_product" | "product" => {
                self.expect(b':')?;
                let g = self.family()?;
                self.expect(b',')?;
                let h = self.family()?;
                if name == "join" {
                    Family::Join(Box::new(g), Box::new(h))
                } else {
                    Family::CartesianProduct(Box::new(g), Box::new(h))
                }
            }
            "double_cover" => {
                self.expect(b':')?;
                Family::DoubleCover(Box::new(self.family()?))
            }
            other => return Err(input(format!("unknown graph family {other:?}"))),
        })
    }
}
