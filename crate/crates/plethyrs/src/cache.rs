//! Thread-safe character cache and parallel drivers over it.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};
use std::sync::RwLock;

use plethyrs_core::flip::{is_flip_symmetric, FlipMode, Offset};
use plethyrs_core::symfunc::{CharacterMemo, Projection};
use plethyrs_core::{BigInt, Error, PSeries, Partition, SchurExpansion};
use rayon::prelude::*;

const SHARDS: usize = 32;

type Shard = RwLock<HashMap<(Partition, Partition), BigInt>>;

/// Character memo shared between worker threads. Reads take a shared lock
/// on one shard; inserts take that shard's write lock.
pub struct SharedCharacterTable {
    shards: Vec<Shard>,
}

impl Default for SharedCharacterTable {
    fn default() -> Self {
        SharedCharacterTable { shards: (0..SHARDS).map(|_| RwLock::default()).collect() }
    }
}

impl SharedCharacterTable {
    pub fn new() -> Self {
        Self::default()
    }

    fn shard(&self, shape: &Partition, cycle_type: &Partition) -> &Shard {
        let mut h = DefaultHasher::new();
        shape.hash(&mut h);
        cycle_type.hash(&mut h);
        &self.shards[(h.finish() as usize) % SHARDS]
    }

    pub fn len(&self) -> usize {
        self.shards.iter().map(|s| s.read().expect("poisoned").len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl CharacterMemo for SharedCharacterTable {
    fn lookup(&self, shape: &Partition, cycle_type: &Partition) -> Option<BigInt> {
        let key = (shape.clone(), cycle_type.clone());
        self.shard(shape, cycle_type).read().expect("poisoned").get(&key).cloned()
    }

    fn store(&self, shape: Partition, cycle_type: Partition, value: BigInt) {
        let shard = self.shard(&shape, &cycle_type);
        shard.write().expect("poisoned").insert((shape, cycle_type), value);
    }
}

/// Schur coefficients of `f` at `targets`, one task per target; results
/// are assembled in target order.
pub fn project_par(
    memo: &SharedCharacterTable,
    f: &PSeries,
    targets: &[Partition],
) -> Result<SchurExpansion, Error> {
    let projection = Projection::new(f);
    let coeffs = targets
        .par_iter()
        .map(|lam| projection.coefficient(memo, lam))
        .collect::<Result<Vec<_>, _>>()?;
    SchurExpansion::from_terms(f.degree(), targets.iter().cloned().zip(coeffs))
}

/// Parallel version of [`plethyrs_core::flip::find_offsets`].
pub fn find_offsets_par(f: &SchurExpansion, mode: FlipMode) -> Vec<Offset> {
    let Some(max_first) = f.support().filter(|mu| mu.is_hook_column()).map(|mu| mu.part(0)).max()
    else {
        return Vec::new();
    };
    let lo = match mode {
        FlipMode::Standard => 2,
        FlipMode::Extended => 0,
    };
    (lo..=max_first)
        .into_par_iter()
        .filter(|&r| is_flip_symmetric(f, r, mode).holds)
        .map(|r| Offset { r, extended: r < 2 })
        .collect()
}
