pub mod bitset;
pub mod fields;
pub mod graph;
pub mod graph6;
pub mod canon;
pub mod group;
pub mod spaces;
pub mod hyperovals;
pub mod synthesis;
pub mod claims;
pub mod catalog;
