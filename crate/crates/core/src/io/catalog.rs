//! Built-in examples: the Painlevé equations and the classical linear
//! equations giving their special solutions.
//!
//! Expected data is stated in build order (core nodes, then formal legs,
//! then tame legs). `published_order` lists the build-order node shown at
//! each position when a matrix is usually written with a different
//! ordering.

use crate::error::{Error, Result};
use crate::io::parse::InputDocument;

#[derive(Clone, Copy, Debug)]
pub struct SpecialSolutions {
    /// Catalog name of the linear equation.
    pub linear: &'static str,
    /// Node removed from this diagram to obtain the linear one.
    pub remove: usize,
}

#[derive(Clone, Copy, Debug)]
pub struct Expectation {
    pub cartan: &'static [&'static [i64]],
    pub dims: &'static [u64],
    pub dim_b: i64,
    pub published_order: Option<&'static [usize]>,
    /// Number of parameters of the Painlevé equation.
    pub parameters: Option<usize>,
    pub special: Option<SpecialSolutions>,
    /// Inputs taken from the standard Lax pairs rather than stated explicitly;
    /// expectations follow from node counts and dimensions.
    pub derived: bool,
}

#[derive(Clone, Copy, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub title: &'static str,
    pub source: &'static str,
    pub expected: Expectation,
}

impl CatalogEntry {
    pub fn document(&self) -> Result<InputDocument> {
        InputDocument::parse(self.source)
    }
}

const fn plain(cartan: &'static [&'static [i64]], dims: &'static [u64], dim_b: i64) -> Expectation {
    Expectation {
        cartan,
        dims,
        dim_b,
        published_order: None,
        parameters: None,
        special: None,
        derived: false,
    }
}

pub static CATALOG: &[CatalogEntry] = &[
    CatalogEntry {
        name: "airy",
        title: "Airy equation y'' = xy",
        source: "# Airy: one ramified circle\ninfinity {\n  factor \"x^(3/2)\" mult 1\n}\n",
        expected: plain(&[&[2]], &[1], 0),
    },
    CatalogEntry {
        name: "weber",
        title: "Weber equation",
        source: "# Weber: untwisted, two circles\ninfinity {\n  factor \"x^2\" mult 1\n  factor \"-x^2\" mult 1\n}\n",
        expected: plain(&[&[2, -1], &[-1, 2]], &[1, 1], 0),
    },
    CatalogEntry {
        name: "bessel-clifford",
        title: "Bessel-Clifford equation xy'' + ay' = y",
        source: "# 0F1: ramified circle plus a tame pole at 0\ninfinity {\n  factor \"x^(1/2)\" mult 1\n}\npole 0 { a: [1], b: [1] }\n",
        expected: Expectation {
            published_order: Some(&[1, 0]),
            ..plain(&[&[4, -2], &[-2, 2]], &[1, 1], 0)
        },
    },
    CatalogEntry {
        name: "kummer",
        title: "Kummer equation (1F1)",
        source: "# 1F1: irregular at infinity with factors x and 0, tame pole at 0\ninfinity {\n  factor \"x\" mult 1\n  factor \"0\" mult 1\n}\npole 0 { a: [1], b: [1] }\n",
        expected: plain(&[&[2, 0, -1], &[0, 2, -1], &[-1, -1, 2]], &[1, 1, 1], 0),
    },
    CatalogEntry {
        name: "gauss",
        title: "Gauss hypergeometric equation (2F1)",
        source: "# 2F1: regular singular at infinity, tame poles at 0 and 1\ninfinity {\n  factor \"0\" mult 2 monodromy { a: [1], b: [1] }\n}\npole 0 { a: [1], b: [1] }\npole 1 { a: [1], b: [1] }\n",
        expected: plain(
            &[&[2, -1, -1, -1], &[-1, 2, 0, 0], &[-1, 0, 2, 0], &[-1, 0, 0, 2]],
            &[2, 1, 1, 1],
            0,
        ),
    },
    CatalogEntry {
        name: "p1",
        title: "Painleve I",
        source: "# P1\ninfinity {\n  factor \"x^(5/2)\" mult 1\n}\n",
        expected: Expectation {
            parameters: Some(0),
            ..plain(&[&[0]], &[1], 2)
        },
    },
    CatalogEntry {
        name: "p2-jm",
        title: "Painleve II (Jimbo-Miwa Lax pair)",
        source: "# P2, Jimbo-Miwa: untwisted, two circles\ninfinity {\n  factor \"x^3\" mult 1\n  factor \"-x^3\" mult 1\n}\n",
        expected: Expectation {
            parameters: Some(1),
            special: Some(SpecialSolutions { linear: "airy", remove: 1 }),
            ..plain(&[&[2, -2], &[-2, 2]], &[1, 1], 2)
        },
    },
    CatalogEntry {
        name: "p2-fn",
        title: "Painleve II (Flaschka-Newell Lax pair)",
        source: "# P2, Flaschka-Newell: ramified circle plus a tame pole at 0\ninfinity {\n  factor \"x^(3/2)\" mult 1\n}\npole 0 { a: [1], b: [1] }\n",
        expected: Expectation {
            parameters: Some(1),
            special: Some(SpecialSolutions { linear: "airy", remove: 1 }),
            ..plain(&[&[2, -2], &[-2, 2]], &[1, 1], 2)
        },
    },
    CatalogEntry {
        name: "p3",
        title: "Painleve III (degenerate fifth Lax pair)",
        source: "# P3: ramified circle plus tame poles at 0 and 1\ninfinity {\n  factor \"x^(1/2)\" mult 1\n}\npole 0 { a: [1], b: [1] }\npole 1 { a: [1], b: [1] }\n",
        expected: Expectation {
            published_order: Some(&[1, 0, 2]),
            parameters: Some(2),
            special: Some(SpecialSolutions { linear: "bessel-clifford", remove: 2 }),
            ..plain(&[&[4, -2, -2], &[-2, 2, 0], &[-2, 0, 2]], &[1, 1, 1], 2)
        },
    },
    CatalogEntry {
        name: "p4",
        title: "Painleve IV (Jimbo-Miwa Lax pair)",
        source: "# P4: pole of order 3 at infinity, tame pole at 0\ninfinity {\n  factor \"x^2\" mult 1\n  factor \"-x^2\" mult 1\n}\npole 0 { a: [1], b: [1] }\n",
        expected: Expectation {
            parameters: Some(2),
            special: Some(SpecialSolutions { linear: "weber", remove: 2 }),
            derived: true,
            ..plain(&[&[2, -1, -1], &[-1, 2, -1], &[-1, -1, 2]], &[1, 1, 1], 2)
        },
    },
    CatalogEntry {
        name: "p5",
        title: "Painleve V (Jimbo-Miwa Lax pair)",
        source: "# P5: pole of order 2 at infinity, tame poles at 0 and 1\ninfinity {\n  factor \"x\" mult 1\n  factor \"-x\" mult 1\n}\npole 0 { a: [1], b: [1] }\npole 1 { a: [1], b: [1] }\n",
        expected: Expectation {
            parameters: Some(3),
            special: Some(SpecialSolutions { linear: "kummer", remove: 3 }),
            derived: true,
            ..plain(
                &[&[2, 0, -1, -1], &[0, 2, -1, -1], &[-1, -1, 2, 0], &[-1, -1, 0, 2]],
                &[1, 1, 1, 1],
                2,
            )
        },
    },
    CatalogEntry {
        name: "p6",
        title: "Painleve VI (Jimbo-Miwa Lax pair)",
        source: "# P6: four regular singularities, one of them at infinity\ninfinity {\n  factor \"0\" mult 2 monodromy { a: [1], b: [1] }\n}\npole 0 { a: [1], b: [1] }\npole 1 { a: [1], b: [1] }\npole t { a: [1], b: [1] }\n",
        expected: Expectation {
            parameters: Some(4),
            special: Some(SpecialSolutions { linear: "gauss", remove: 4 }),
            derived: true,
            ..plain(
                &[
                    &[2, -1, -1, -1, -1],
                    &[-1, 2, 0, 0, 0],
                    &[-1, 0, 2, 0, 0],
                    &[-1, 0, 0, 2, 0],
                    &[-1, 0, 0, 0, 2],
                ],
                &[2, 1, 1, 1, 1],
                2,
            )
        },
    },
];

pub fn entry(name: &str) -> Result<&'static CatalogEntry> {
    CATALOG
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownExample(name.to_string()))
}

/// The stored input document for a named example.
pub fn catalog(name: &str) -> Result<InputDocument> {
    entry(name)?.document()
}

pub fn names() -> impl Iterator<Item = &'static str> {
    CATALOG.iter().map(|e| e.name)
}
