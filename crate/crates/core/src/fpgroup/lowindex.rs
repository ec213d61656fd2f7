//! Low-index subgroup search.
//!
//! Coset tables are built by backtracking: the first undefined entry in
//! row-major order is set to each admissible coset in turn, relator scans
//! propagate forced entries, and a table survives only if it is the minimal
//! standard-form relabeling among all choices of basepoint. Each conjugacy
//! class of subgroups of index at most `n` is therefore met exactly once.
//!
//! Subtrees below a shallow frontier are explored in parallel; results are
//! sorted afterwards so the output does not depend on scheduling.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;

use super::perm::Perm;
use super::presentation::GroupPresentation;
use super::record::SubgroupRecord;
use super::GroupError;

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

/// Largest index the search accepts.
pub const MAX_SEARCH_INDEX: usize = 255;

const NONE: u16 = u16::MAX;

/// Knobs for [`low_index_search`].
#[derive(Clone, Debug)]
pub struct LowIndexOptions {
    pub max_index: usize,
    /// Report only subgroups whose index equals `max_index`.
    pub exact_index: bool,
    /// Prune actions in which some generator of declared order `m` has a
    /// cycle shorter than `m`, so only torsion-free subgroups are reported.
    pub torsion_free: bool,
    pub node_budget: u64,
    /// Worker threads; 0 uses the ambient rayon pool.
    pub threads: usize,
}

impl LowIndexOptions {
    pub fn up_to(max_index: usize) -> Self {
        LowIndexOptions {
            max_index,
            exact_index: false,
            torsion_free: false,
            node_budget: DEFAULT_NODE_BUDGET,
            threads: 0,
        }
    }

    pub fn exact(mut self) -> Self {
        self.exact_index = true;
        self
    }

    pub fn torsion_free(mut self) -> Self {
        self.torsion_free = true;
        self
    }

    pub fn threads(mut self, threads: usize) -> Self {
        self.threads = threads;
        self
    }

    pub fn node_budget(mut self, budget: u64) -> Self {
        self.node_budget = budget;
        self
    }
}

#[derive(Clone, Debug)]
pub struct LowIndexOutcome {
    pub records: Vec<SubgroupRecord>,
    pub nodes: u64,
}

/// One record per conjugacy class of subgroups of index at most `n`, sorted
/// by [`SubgroupRecord::sort_key`].
pub fn low_index_subgroups(presentation: &GroupPresentation, n: usize) -> Result<Vec<SubgroupRecord>, GroupError> {
    Ok(low_index_search(presentation, &LowIndexOptions::up_to(n))?.records)
}

pub fn low_index_search(
    presentation: &GroupPresentation,
    options: &LowIndexOptions,
) -> Result<LowIndexOutcome, GroupError> {
    if options.max_index == 0 {
        return Err(GroupError::Parse("index bound must be at least 1".into()));
    }
    if options.max_index > MAX_SEARCH_INDEX {
        return Err(GroupError::IndexTooLarge(options.max_index, MAX_SEARCH_INDEX));
    }
    if options.torsion_free && !presentation.has_declared_orders() {
        return Err(GroupError::MissingOrders);
    }
    if options.torsion_free && options.exact_index {
        // Every cycle of an order-m generator has length m, so m | n.
        let n = options.max_index as u32;
        if presentation.orders().iter().flatten().any(|&m| !n.is_multiple_of(m)) {
            return Ok(LowIndexOutcome {
                records: vec![],
                nodes: 0,
            });
        }
    }
    let search = Search::new(presentation, options);
    let run = || search.run();
    let (mut tables, nodes) = if options.threads > 0 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(options.threads)
            .build()
            .map_err(|e| GroupError::Parse(format!("thread pool: {e}")))?;
        pool.install(run)?
    } else {
        run()?
    };
    let mut records: Vec<SubgroupRecord> = tables.drain(..).map(|t| search.to_record(&t)).collect();
    records.sort_by_cached_key(SubgroupRecord::sort_key);
    debug_assert!(records
        .iter()
        .all(|r| SubgroupRecord::new(presentation, r.perms().to_vec()).is_ok()));
    Ok(LowIndexOutcome { records, nodes })
}

/// Slow deduplication by explicit isomorphism tests, keeping the first
/// representative of each class.
pub fn dedup_by_isomorphism(records: &[SubgroupRecord]) -> Vec<SubgroupRecord> {
    let mut kept: Vec<SubgroupRecord> = Vec::new();
    for r in records {
        if !kept.iter().any(|k| k.is_isomorphic(r)) {
            kept.push(r.clone());
        }
    }
    kept
}

#[derive(Clone)]
struct Table {
    entries: Vec<u16>,
    count: usize,
    fill: usize,
}

struct Search {
    max: usize,
    ncols: usize,
    inv: Vec<usize>,
    /// Forward column of each generator.
    gen_col: Vec<usize>,
    /// Generator (and its declared order, when pruning) behind each column.
    col_gen: Vec<usize>,
    prune_order: Vec<Option<usize>>,
    /// Relator rotations grouped by their first column.
    rotations: Vec<Vec<Vec<usize>>>,
    exact: bool,
    budget: u64,
    nodes: AtomicU64,
    exhausted: AtomicBool,
}

impl Search {
    fn new(presentation: &GroupPresentation, options: &LowIndexOptions) -> Self {
        let mut inv = Vec::new();
        let mut gen_col = Vec::new();
        let mut col_gen = Vec::new();
        let mut inverse_col = Vec::new();
        for (g, order) in presentation.orders().iter().enumerate() {
            let c = inv.len();
            gen_col.push(c);
            if *order == Some(2) {
                inv.push(c);
                col_gen.push(g);
                inverse_col.push(c);
            } else {
                inv.push(c + 1);
                inv.push(c);
                col_gen.push(g);
                col_gen.push(g);
                inverse_col.push(c + 1);
            }
        }
        let ncols = inv.len();
        let mut rotations = vec![Vec::new(); ncols];
        for r in presentation.relators() {
            let mut cols: Vec<usize> = Vec::new();
            for l in r.letters() {
                let c = if l.inv { inverse_col[l.gen] } else { gen_col[l.gen] };
                if cols.last() == Some(&inv[c]) {
                    cols.pop();
                } else {
                    cols.push(c);
                }
            }
            while cols.len() >= 2 && cols[0] == inv[cols[cols.len() - 1]] {
                cols.pop();
                cols.remove(0);
            }
            if cols.is_empty() {
                continue;
            }
            for k in 0..cols.len() {
                let mut rot = cols[k..].to_vec();
                rot.extend_from_slice(&cols[..k]);
                let bucket: &mut Vec<Vec<usize>> = &mut rotations[rot[0]];
                if !bucket.contains(&rot) {
                    bucket.push(rot);
                }
            }
        }
        let prune_order = presentation
            .orders()
            .iter()
            .map(|o| match o {
                Some(m) if options.torsion_free && *m >= 2 => Some(*m as usize),
                _ => None,
            })
            .collect();
        Search {
            max: options.max_index,
            ncols,
            inv,
            gen_col,
            col_gen,
            prune_order,
            rotations,
            exact: options.exact_index,
            budget: options.node_budget,
            nodes: AtomicU64::new(0),
            exhausted: AtomicBool::new(false),
        }
    }

    fn root(&self) -> Table {
        Table {
            entries: vec![NONE; self.max * self.ncols],
            count: 1,
            fill: 0,
        }
    }

    fn to_record(&self, t: &Table) -> SubgroupRecord {
        let perms = self
            .gen_col
            .iter()
            .map(|&c| {
                let images = (0..t.count).map(|i| t.entries[i * self.ncols + c] as u32).collect();
                Perm::from_images(images).expect("complete coset table")
            })
            .collect();
        SubgroupRecord::from_trusted(perms)
    }

    #[inline]
    fn get(&self, t: &Table, c: usize, x: usize) -> u16 {
        t.entries[c * self.ncols + x]
    }

    #[inline]
    fn set(&self, t: &mut Table, c: usize, x: usize, d: usize) {
        t.entries[c * self.ncols + x] = d as u16;
        t.entries[d * self.ncols + self.inv[x]] = c as u16;
    }

    /// Propagates the consequences of newly set entries. Returns false on a
    /// contradiction or a pruned short cycle.
    fn propagate(&self, t: &mut Table, pending: &mut Vec<(usize, usize)>) -> bool {
        while let Some((c, x)) = pending.pop() {
            let d = self.get(t, c, x) as usize;
            if !self.cycle_ok(t, c, x, d) {
                return false;
            }
            for rot in &self.rotations[x] {
                if !self.scan(t, c, rot, pending) {
                    return false;
                }
            }
            for rot in &self.rotations[self.inv[x]] {
                if !self.scan(t, d, rot, pending) {
                    return false;
                }
            }
        }
        true
    }

    /// With torsion pruning on, rejects a closed cycle of an order-`m`
    /// generator whose length is less than `m`.
    fn cycle_ok(&self, t: &Table, c: usize, x: usize, d: usize) -> bool {
        let g = self.col_gen[x];
        let Some(m) = self.prune_order[g] else {
            return true;
        };
        let fwd = self.gen_col[g];
        let start = if x == fwd { c } else { d };
        let mut y = start;
        for _ in 1..m {
            let next = self.get(t, y, fwd);
            if next == NONE {
                return true;
            }
            y = next as usize;
            if y == start {
                return false;
            }
        }
        true
    }

    fn scan(&self, t: &mut Table, start: usize, word: &[usize], pending: &mut Vec<(usize, usize)>) -> bool {
        let len = word.len();
        let mut f = start;
        let mut i = 0;
        while i < len {
            let next = self.get(t, f, word[i]);
            if next == NONE {
                break;
            }
            f = next as usize;
            i += 1;
        }
        if i == len {
            return f == start;
        }
        let mut b = start;
        let mut j = len;
        while j > i {
            let prev = self.get(t, b, self.inv[word[j - 1]]);
            if prev == NONE {
                break;
            }
            b = prev as usize;
            j -= 1;
        }
        if j == i {
            return false;
        }
        if j == i + 1 {
            let x = word[i];
            if self.get(t, b, self.inv[x]) != NONE {
                return false;
            }
            self.set(t, f, x, b);
            pending.push((f, x));
        }
        true
    }

    /// Whether the table is the least standard-form relabeling over all
    /// basepoints, judged on the entries defined so far.
    fn is_canonical(&self, t: &Table) -> bool {
        let n = t.count;
        let mut fwd = [NONE; MAX_SEARCH_INDEX + 1];
        let mut back = [NONE; MAX_SEARCH_INDEX + 1];
        'bases: for s in 1..n {
            fwd[..n].fill(NONE);
            fwd[s] = 0;
            back[0] = s as u16;
            let mut next = 1usize;
            for row in 0..n {
                if row >= next {
                    continue 'bases;
                }
                let old = back[row] as usize;
                for x in 0..self.ncols {
                    let orig = self.get(t, row, x);
                    let img = self.get(t, old, x);
                    if orig == NONE || img == NONE {
                        continue 'bases;
                    }
                    let mut relabeled = fwd[img as usize];
                    if relabeled == NONE {
                        relabeled = next as u16;
                        fwd[img as usize] = relabeled;
                        back[next] = img;
                        next += 1;
                    }
                    if relabeled < orig {
                        return false;
                    }
                    if relabeled > orig {
                        continue 'bases;
                    }
                }
            }
        }
        true
    }

    fn advance(&self, t: &mut Table) {
        let end = t.count * self.ncols;
        while t.fill < end && t.entries[t.fill] != NONE {
            t.fill += 1;
        }
    }

    fn tick(&self) -> Result<(), GroupError> {
        let n = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if n > self.budget {
            self.exhausted.store(true, Ordering::Relaxed);
        }
        if self.exhausted.load(Ordering::Relaxed) {
            return Err(GroupError::ResourceLimit(self.budget));
        }
        Ok(())
    }

    /// Children of a table whose fill pointer has been advanced.
    fn children(&self, t: &Table) -> Vec<Table> {
        let c = t.fill / self.ncols;
        let x = t.fill % self.ncols;
        let xi = self.inv[x];
        let mut out = Vec::new();
        let limit = if t.count < self.max { t.count + 1 } else { t.count };
        for j in 0..limit {
            if j < t.count && self.get(t, j, xi) != NONE {
                continue;
            }
            let mut child = t.clone();
            if j == t.count {
                child.count += 1;
            }
            self.set(&mut child, c, x, j);
            let mut pending = vec![(c, x)];
            if self.propagate(&mut child, &mut pending) && self.is_canonical(&child) {
                self.advance(&mut child);
                out.push(child);
            }
        }
        out
    }

    fn is_complete(&self, t: &Table) -> bool {
        t.fill == t.count * self.ncols
    }

    fn accept(&self, t: &Table) -> bool {
        !self.exact || t.count == self.max
    }

    fn dfs(&self, t: Table, out: &mut Vec<Table>) -> Result<(), GroupError> {
        self.tick()?;
        if self.is_complete(&t) {
            if self.accept(&t) {
                out.push(t);
            }
            return Ok(());
        }
        for child in self.children(&t) {
            self.dfs(child, out)?;
        }
        Ok(())
    }

    fn run(&self) -> Result<(Vec<Table>, u64), GroupError> {
        let mut done = Vec::new();
        let mut frontier = vec![self.root()];
        let target = 16 * rayon::current_num_threads().max(1);
        // Breadth-first expansion until there is enough work to share.
        while !frontier.is_empty() && frontier.len() < target {
            let mut next = Vec::new();
            for t in frontier {
                self.tick()?;
                if self.is_complete(&t) {
                    if self.accept(&t) {
                        done.push(t);
                    }
                    continue;
                }
                next.extend(self.children(&t));
            }
            frontier = next;
        }
        let parts: Vec<Vec<Table>> = frontier
            .into_par_iter()
            .map(|t| {
                let mut out = Vec::new();
                self.dfs(t, &mut out).map(|_| out)
            })
            .collect::<Result<_, _>>()?;
        done.extend(parts.into_iter().flatten());
        Ok((done, self.nodes.load(Ordering::Relaxed)))
    }
}
