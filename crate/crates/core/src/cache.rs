//! Build-once keyed caches shared across threads.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, OnceLock, RwLock};

/// A lazily initialized map from keys to shared values. Concurrent misses may
/// build the same value twice; the first insert wins.
pub(crate) struct Memo<K, V> {
    cell: OnceLock<RwLock<HashMap<K, Arc<V>>>>,
}

impl<K: Eq + Hash + Clone, V> Memo<K, V> {
    pub const fn new() -> Self {
        Memo { cell: OnceLock::new() }
    }

    pub fn get_or_build(&self, key: &K, build: impl FnOnce() -> V) -> Arc<V> {
        let lock = self.cell.get_or_init(Default::default);
        if let Some(v) = lock.read().expect("cache poisoned").get(key) {
            return v.clone();
        }
        let built = Arc::new(build());
        lock.write().expect("cache poisoned").entry(key.clone()).or_insert(built).clone()
    }
}
