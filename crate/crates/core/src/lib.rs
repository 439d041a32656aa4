pub mod algebra;
pub mod oracle;
pub mod patterns;
pub mod posets;
pub mod reciprocity;
pub mod suites;
