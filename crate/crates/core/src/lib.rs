pub mod bounds;
pub mod drg;
pub mod exactnum;
pub mod finitegeom;
pub mod geometric;
pub mod krein;
pub mod report;
pub mod search;
