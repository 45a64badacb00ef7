//! Point-algebra families and the example registry.
//!
//! Every example is a [`Bundle`](cedga_dsl::Bundle) whose domain presentation
//! is called `main`.

mod error;
mod families;
mod registry;

pub use error::CatalogError;
pub use families::{
    add_hat_points, add_points, free_product, make_hat_point_algebra, make_hat_point_algebra_with, make_point_algebra,
    make_point_algebra_with, FreeProduct, HatSign, HatSpec, PointSpec, SignReading,
};
pub use registry::{example, example_with_level, list, DEFAULT_P_MAX};
