//! Exact enumeration, encoding and verification toolkit for bridge-addable
//! graph classes at desk scale (n <= 16, enumeration n <= 10).
//!
//! A class of graphs is *bridge-addable* when adding an edge between two
//! components of a member stays in the class, and *decomposable* when
//! membership holds iff it holds for every component. This crate enumerates
//! the unlabelled members of a few such classes exactly, realizes the
//! encoding of members as rooted connected members plus one bit (giving the
//! counting inequality |members_n| <= 2 |rooted connected_n| <= 2n
//! |connected_n|), and computes the exact counting sequences behind the
//! connectivity constants e^-1, e^-1/2 and tau ~ 0.5930.
//!
//! ```
//! use bridgelab::classes::ClassSpec;
//! use bridgelab::codec::{decode, encode};
//! use bridgelab::enumerate::enumerate_all;
//! use bridgelab::graph::Graph;
//!
//! // two disjoint edges make a forest on 4 vertices
//! let g = Graph::from_edges(4, &[(0, 1), (2, 3)])?;
//! let forests = ClassSpec::Forests;
//! assert!(forests.contains(&g));
//!
//! // encode as a rooted connected member plus one bit, and decode exactly
//! let enc = encode(&forests, &g)?;
//! assert!(enc.h.is_connected());
//! assert_eq!(decode(&forests, &enc)?, g);
//!
//! // ten unlabelled forests on 5 vertices
//! assert_eq!(enumerate_all(&forests, 5)?.len(), 10);
//! # Ok::<(), bridgelab::Error>(())
//! ```

pub mod acceptance;
pub mod classes;
pub mod codec;
pub mod enumerate;
mod error;
pub mod graph;
pub mod iso;
pub mod ratio;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
