use std::net::SocketAddr;
use std::path::PathBuf;

use knowcard_core::store::{StoreOptions, DEFAULT_BASE};

pub const DEFAULT_BIND: &str = "127.0.0.1:7341";

#[derive(Debug, Clone, PartialEq)]
pub struct ServiceConfig {
    pub bind: SocketAddr,
    pub store_root: PathBuf,
    pub base: String,
    pub schema_path: Option<PathBuf>,
    /// Create the store layout when the root is empty.
    pub init: bool,
}

impl Default for ServiceConfig {
    fn default() -> Self {
        ServiceConfig {
            bind: DEFAULT_BIND.parse().expect("valid default address"),
            store_root: PathBuf::from("knowcard-store"),
            base: DEFAULT_BASE.into(),
            schema_path: None,
            init: false,
        }
    }
}

impl ServiceConfig {
    /// Defaults overridden by `KNOWCARD_BIND`, `KNOWCARD_STORE`,
    /// `KNOWCARD_BASE` and `KNOWCARD_SCHEMA`.
    pub fn from_env() -> Result<Self, String> {
        Self::from_lookup(|name| std::env::var(name).ok())
    }

    pub fn from_lookup(lookup: impl Fn(&str) -> Option<String>) -> Result<Self, String> {
        let mut config = ServiceConfig::default();
        if let Some(bind) = lookup("KNOWCARD_BIND") {
            config.bind = bind
                .parse()
                .map_err(|_| format!("KNOWCARD_BIND: '{bind}' is not a socket address"))?;
        }
        if let Some(root) = lookup("KNOWCARD_STORE") {
            config.store_root = root.into();
        }
        if let Some(base) = lookup("KNOWCARD_BASE") {
            config.base = base;
        }
        config.schema_path = lookup("KNOWCARD_SCHEMA").map(PathBuf::from);
        Ok(config)
    }

    pub fn store_options(&self) -> StoreOptions {
        StoreOptions {
            base: self.base.clone(),
            schema_path: self.schema_path.clone(),
            create: self.init,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn environment_overrides() {
        let config = ServiceConfig::from_lookup(|k| match k {
            "KNOWCARD_BIND" => Some("0.0.0.0:9000".into()),
            "KNOWCARD_BASE" => Some("http://example.org/pen/".into()),
            _ => None,
        })
        .unwrap();
        assert_eq!(config.bind.port(), 9000);
        assert_eq!(config.base, "http://example.org/pen/");
        assert_eq!(config.store_root, PathBuf::from("knowcard-store"));
        assert!(ServiceConfig::from_lookup(|_| Some("nope".into())).is_err());
        assert_eq!(ServiceConfig::default().bind.to_string(), DEFAULT_BIND);
    }
}
