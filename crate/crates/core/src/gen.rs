//! Seeded generators for Tseitin and xorified k-XOR formulas.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::formula::{Clause, CnfFormula, Lit, Var};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("invalid parameters: {0}")]
    Params(String),
    #[error("no simple connected {d}-regular graph on {n} vertices after {tries} attempts")]
    Pairing { n: usize, d: usize, tries: usize },
}

/// `vars[0] ^ vars[1] ^ ... = parity`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XorConstraint {
    pub vars: Vec<Var>,
    pub parity: bool,
}

impl XorConstraint {
    pub fn new(vars: Vec<Var>, parity: bool) -> Self {
        let mut s = vars.clone();
        s.sort();
        s.dedup();
        assert_eq!(s.len(), vars.len(), "xor over repeated variables");
        XorConstraint { vars, parity }
    }
}

/// One clause per falsifying assignment, `2^(k-1)` in all.
pub fn xor_to_clauses(c: &XorConstraint) -> Vec<Clause> {
    let k = c.vars.len();
    assert!((1..=24).contains(&k));
    let mut out = Vec::with_capacity(1 << (k - 1));
    for mask in 0u32..(1 << k) {
        if (mask.count_ones() % 2 == 1) == c.parity {
            continue;
        }
        let lits: Vec<Lit> = c
            .vars
            .iter()
            .enumerate()
            .map(|(i, v)| v.lit(mask >> i & 1 == 0))
            .collect();
        out.push(Clause::new(lits).expect("distinct variables"));
    }
    out
}

/// Undirected graph with a charge bit per vertex; edge `i` becomes variable `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChargedGraph {
    pub charges: Vec<bool>,
    pub edges: Vec<(usize, usize)>,
}

impl ChargedGraph {
    pub fn total_charge_odd(&self) -> bool {
        self.charges.iter().filter(|&&c| c).count() % 2 == 1
    }

    pub fn is_connected(&self) -> bool {
        let n = self.charges.len();
        if n == 0 {
            return true;
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen.into_iter().all(|x| x)
    }

    pub fn tseitin(&self) -> CnfFormula {
        let mut incident = vec![Vec::new(); self.charges.len()];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            incident[u].push(Var::new(i));
            incident[v].push(Var::new(i));
        }
        let mut f = CnfFormula::new(self.edges.len());
        for (v, vars) in incident.into_iter().enumerate() {
            if vars.is_empty() {
                if self.charges[v] {
                    f.add_clause(Clause::new(Vec::new()).unwrap());
                }
                continue;
            }
            for c in xor_to_clauses(&XorConstraint::new(vars, self.charges[v])) {
                f.add_clause(c);
            }
        }
        f
    }
}

/// The `rows x cols` grid. Edges are numbered row by row, horizontal edges of
/// a row before the vertical edges leaving it downwards.
pub fn grid_graph(rows: usize, cols: usize, charges: Vec<bool>) -> Result<ChargedGraph, GenError> {
    if rows < 2 || cols < 2 {
        return Err(GenError::Params("grid needs at least 2 rows and 2 columns".into()));
    }
    if charges.len() != rows * cols {
        return Err(GenError::Params("one charge per vertex required".into()));
    }
    let id = |r: usize, c: usize| r * cols + c;
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols - 1 {
            edges.push((id(r, c), id(r, c + 1)));
        }
        if r + 1 < rows {
            for c in 0..cols {
                edges.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    Ok(ChargedGraph { charges, edges })
}

/// Grid Tseitin formula with a single charged vertex (row-major index).
pub fn gen_tseitin_grid(rows: usize, cols: usize, charge_vertex: usize) -> Result<CnfFormula, GenError> {
    if charge_vertex >= rows * cols {
        return Err(GenError::Params(format!("charged vertex {charge_vertex} out of range")));
    }
    let mut charges = vec![false; rows * cols];
    charges[charge_vertex] = true;
    Ok(grid_graph(rows, cols, charges)?.tseitin())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChargeScheme {
    /// Vertex 0 carries the parity, all others 0.
    SingleVertex,
    /// Uniform charges, vertex 0 adjusted to the parity.
    Random,
}

const PAIRING_TRIES: usize = 10_000;

/// Random simple connected `d`-regular graph from the pairing model.
pub fn random_regular_graph<R: Rng>(n: usize, d: usize, rng: &mut R) -> Result<Vec<(usize, usize)>, GenError> {
    if d == 0 || d >= n || (n * d) % 2 == 1 {
        return Err(GenError::Params(format!("no {d}-regular graph on {n} vertices")));
    }
    let mut points: Vec<usize> = (0..n * d).map(|p| p / d).collect();
    'attempt: for _ in 0..PAIRING_TRIES {
        points.shuffle(rng);
        let mut edges: Vec<(usize, usize)> = Vec::with_capacity(n * d / 2);
        for pair in points.chunks(2) {
            let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if u == v {
                continue 'attempt;
            }
            edges.push((u, v));
        }
        let mut sorted = edges.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        let g = ChargedGraph {
            charges: vec![false; n],
            edges: sorted.clone(),
        };
        if g.is_connected() {
            return Ok(sorted);
        }
    }
    Err(GenError::Pairing {
        n,
        d,
        tries: PAIRING_TRIES,
    })
}

pub fn gen_tseitin_regular(
    n: usize,
    d: usize,
    seed: u64,
    odd: bool,
    scheme: ChargeScheme,
) -> Result<CnfFormula, GenError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges = random_regular_graph(n, d, &mut rng)?;
    let mut charges = vec![false; n];
    if scheme == ChargeScheme::Random {
        for c in charges.iter_mut().skip(1) {
            *c = rng.gen();
        }
    }
    let rest = charges.iter().filter(|&&c| c).count() % 2 == 1;
    charges[0] = rest != odd;
    Ok(ChargedGraph { charges, edges }.tseitin())
}

/// `nclauses` random `k`-XOR constraints over `nvars` variables, each variable
/// then replaced by the XOR of `m` fresh ones.
pub fn gen_xorified_kxor(nvars: usize, nclauses: usize, k: usize, m: usize, seed: u64) -> Result<CnfFormula, GenError> {
    if k == 0 || k > nvars {
        return Err(GenError::Params(format!("arity {k} needs 1..={nvars}")));
    }
    if m == 0 || k * m > 20 {
        return Err(GenError::Params(format!(
            "xorification {m} with arity {k} is out of range"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut f = CnfFormula::new(nvars * m);
    for _ in 0..nclauses {
        let mut picked = rand::seq::index::sample(&mut rng, nvars, k).into_vec();
        picked.sort_unstable();
        let parity: bool = rng.gen();
        let vars: Vec<Var> = picked
            .iter()
            .flat_map(|&v| (0..m).map(move |j| Var::new(v * m + j)))
            .collect();
        for c in xor_to_clauses(&XorConstraint::new(vars, parity)) {
            f.add_clause(c);
        }
    }
    Ok(f)
}
