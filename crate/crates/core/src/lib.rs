pub mod model;
pub mod ocl;
pub mod report;
pub mod xml;
pub mod cardxml;
pub mod rdf;
pub mod store;
