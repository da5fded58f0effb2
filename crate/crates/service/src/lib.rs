//! HTTP front end for a knowledge card store.
//!
//! Three layers, outermost first: [`http`] maps requests to calls on
//! [`app::App`], which owns the [`CardStore`](knowcard_core::store::CardStore)
//! and does all storage work; [`profile`] turns cards into their wire
//! representations.

pub mod app;
pub mod config;
pub mod http;
pub mod profile;

pub use app::{ApiError, App};
pub use config::ServiceConfig;
pub use http::router;

/// Serves `app` on an already bound listener until `shutdown` resolves.
pub async fn serve(
    listener: tokio::net::TcpListener,
    app: App,
    shutdown: impl std::future::Future<Output = ()> + Send + 'static,
) -> std::io::Result<()> {
    axum::serve(listener, router(app)).with_graceful_shutdown(shutdown).await
}
