//! Upward planar drawings of rooted trees with bounded width.
//!
//! The crate computes width parameters of rooted trees (rooted pathwidth,
//! heavy-path depth, pathwidth), the rank that determines the optimal width
//! of order-preserving upward drawings, drawing algorithms that realize these
//! widths, and an exact verifier for drawings.
//!
//! ```
//! use uptree::{check_drawing, draw_ordered, parse_tree, rank};
//!
//! let t = parse_tree("((())(()()))").unwrap();
//! let ann = rank(&t);
//! let d = draw_ordered(&t, &ann);
//! let req = "planar,strictly_upward,order_preserving".parse().unwrap();
//! assert!(check_drawing(&t, &d, req).unwrap().violations.is_empty());
//! assert_eq!(d.width() as u32, ann.root());
//! ```

pub mod layout;
pub mod oracle;
pub mod rank;
pub mod render;
pub mod tree;
pub mod verify;
pub mod width;

pub use layout::{draw_ordered, draw_unordered, reduce_bends, Drawing, Edge, Mode, Point};
pub use rank::{rank, CornerWitness, RankAnnotation, RankWitness, Side};
pub use render::{render_ascii, render_svg};
pub use tree::{parse_tree, serialize_tree, NodeId, Tree};
pub use verify::{check_drawing, extract_rank_witness, Extraction, Require, VerifyReport};
pub use width::{heavy_path_depth, rooted_pathwidth, RpwAnnotation};
