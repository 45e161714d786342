//! Exact arithmetic for matroids with coefficients in a hyperfield.

pub mod cli;
pub mod constructions;
pub mod error;
pub mod hopf;
pub mod hyperfield;
pub mod io;
pub mod iso;
pub mod matroid;
pub mod report;

pub use error::{Error, Result};

// Every code block in the guide compiles and runs as a documentation
// test, so the book cannot drift from the library.
#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            mod $name {}
        };
    }

    chapter!(introduction, "../../../book/src/introduction.md");
    chapter!(hyperfields, "../../../book/src/hyperfields.md");
    chapter!(matroids, "../../../book/src/matroids.md");
    chapter!(circuits_duality, "../../../book/src/circuits-duality.md");
    chapter!(minors, "../../../book/src/minors.md");
    chapter!(isomorphism, "../../../book/src/isomorphism.md");
    chapter!(hopf, "../../../book/src/hopf.md");
    chapter!(formats, "../../../book/src/formats.md");
    chapter!(cli, "../../../book/src/cli.md");
}
