use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, Mutex, OnceLock};

/// Keyed cache where each value is computed at most once, even when several
/// threads ask for the same key concurrently. Different keys compute in
/// parallel: the map lock is only held to fetch the per-key cell.
pub(crate) struct Memo<K, V> {
    cells: Mutex<HashMap<K, Arc<OnceLock<Arc<V>>>>>,
}

impl<K: Eq + Hash + Clone, V> Memo<K, V> {
    pub(crate) fn new() -> Self {
        Self {
            cells: Mutex::new(HashMap::new()),
        }
    }

    fn cell(&self, key: &K) -> Arc<OnceLock<Arc<V>>> {
        let mut map = self.cells.lock().unwrap_or_else(|e| e.into_inner());
        map.entry(key.clone()).or_default().clone()
    }

    pub(crate) fn get_or_init(&self, key: &K, init: impl FnOnce() -> V) -> Arc<V> {
        self.cell(key).get_or_init(|| Arc::new(init())).clone()
    }

    /// Seeds a value computed elsewhere (e.g. loaded from disk). Returns false
    /// if the key was already populated; the existing value wins.
    pub(crate) fn insert(&self, key: &K, value: V) -> bool {
        self.cell(key).set(Arc::new(value)).is_ok()
    }
}
