#![allow(dead_code)]

use prism_core::{Cell, MultiPlus, MultiPlusDiagram, Permutation, PlusDiagram};

pub fn perm(s: &str) -> Permutation {
    s.parse().expect("valid permutation")
}

/// Parses cells written as `"11 12 24"` (row digit, column digit).
pub fn cells(n: usize, layout: &str) -> PlusDiagram {
    let cells = layout.split_whitespace().map(|t| {
        let b = t.as_bytes();
        Cell::new((b[0] - b'0') as usize, (b[1] - b'0') as usize)
    });
    PlusDiagram::from_cells(n, cells).expect("cells fit")
}

/// Builds a multi-plus diagram from `cell:colors` tokens, e.g. `"12:Rrb 31:o"`,
/// where `colors` maps each letter to its biGrassmannian factor.
pub fn colored(mp: &MultiPlus, colors: &[(char, &str)], layout: &str) -> MultiPlusDiagram {
    let n = mp.n();
    let comps = mp
        .bigrass
        .iter()
        .map(|u| {
            let letter = colors
                .iter()
                .find(|(_, f)| perm(f) == *u)
                .map(|(c, _)| *c)
                .expect("every factor has a color");
            let cells = layout.split_whitespace().filter_map(|t| {
                let (at, cs) = t.split_once(':').expect("cell:colors");
                let b = at.as_bytes();
                cs.contains(letter)
                    .then(|| Cell::new((b[0] - b'0') as usize, (b[1] - b'0') as usize))
            });
            PlusDiagram::from_cells(n, cells).expect("cells fit")
        })
        .collect();
    MultiPlusDiagram::new(n, comps)
}

pub const EX7_W: &str = "5361724";

pub const EX7_COLORS: [(char, &str); 5] = [
    ('R', "5123467"),
    ('r', "3451267"),
    ('b', "1562347"),
    ('g', "1345627"),
    ('o', "1256734"),
];

pub const EX7_SUPPORT: &str = "11 12 13 14 21 22 24 31 32 34 42";

const EX7_LOWER_ROWS: &str = "31:rb 32:rbgo 34:o 42:go";

/// Vertices of the displayed Hasse diagram, top `a` to bottom `f`.
pub const EX7_VERTICES: [(&str, &str); 6] = [
    ("a", "11:Rr 12:Rrbg 13:Rbo 14:Rbo 21:r 22:rg 24:bo"),
    ("b", "11:Rr 12:Rrbg 13:Rb 14:Rbo 21:r 22:rgo 24:bo"),
    ("c", "11:Rr 12:Rrg 13:Rbo 14:Rbo 21:rb 22:rg 24:bo"),
    ("d", "11:Rr 12:Rrg 13:Rb 14:Rbo 21:rb 22:rgo 24:bo"),
    ("e", "11:Rr 12:Rrg 13:Ro 14:Rbo 21:rb 22:rbg 24:bo"),
    ("f", "11:Rr 12:Rrg 13:R 14:Rbo 21:rb 22:rbgo 24:bo"),
];

/// Covering pairs `(lower, upper)` of the displayed diagram.
pub const EX7_COVERS: [(&str, &str); 7] = [
    ("b", "a"),
    ("c", "a"),
    ("d", "b"),
    ("e", "c"),
    ("f", "d"),
    ("f", "e"),
    ("d", "c"),
];

pub fn ex7_vertex(mp: &MultiPlus, name: &str) -> MultiPlusDiagram {
    let (_, layout) = EX7_VERTICES
        .iter()
        .find(|(v, _)| *v == name)
        .expect("known vertex");
    colored(mp, &EX7_COLORS, &format!("{layout} {EX7_LOWER_ROWS}"))
}
