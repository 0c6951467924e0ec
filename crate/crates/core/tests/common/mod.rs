#![allow(dead_code)]

pub mod replay;

use dipsat::{gen, Clause, CnfFormula, Lit, Var};
use rand::Rng;

/// First satisfying assignment in binary counting order, if any.
pub fn brute_force(f: &CnfFormula) -> Option<Vec<bool>> {
    let n = f.num_vars();
    assert!(n <= 24, "truth table too large");
    (0u64..1 << n).find_map(|bits| {
        let m: Vec<bool> = (0..n).map(|i| bits >> i & 1 == 1).collect();
        f.is_satisfied_by(&m).then_some(m)
    })
}

/// Full truth table evaluated 64 assignments per word: bit `k` of word `w`
/// is the assignment `w * 64 + k`, variable `i` being bit `i` of that index.
pub fn truth_table_sat(f: &CnfFormula) -> bool {
    const LOW: [u64; 6] = [
        0xAAAA_AAAA_AAAA_AAAA,
        0xCCCC_CCCC_CCCC_CCCC,
        0xF0F0_F0F0_F0F0_F0F0,
        0xFF00_FF00_FF00_FF00,
        0xFFFF_0000_FFFF_0000,
        0xFFFF_FFFF_0000_0000,
    ];
    let n = f.num_vars();
    assert!(n <= 26, "truth table too large");
    let words = if n <= 6 { 1 } else { 1usize << (n - 6) };
    let valid = if n < 6 { (1u64 << (1 << n)) - 1 } else { u64::MAX };
    let mut alive = vec![valid; words];
    for c in f.clauses() {
        for (w, a) in alive.iter_mut().enumerate() {
            if *a == 0 {
                continue;
            }
            let mut sat = 0u64;
            for l in c.lits() {
                let i = l.var().index();
                let on = if i < 6 {
                    LOW[i]
                } else if w >> (i - 6) & 1 == 1 {
                    u64::MAX
                } else {
                    0
                };
                sat |= if l.is_positive() { on } else { !on };
            }
            *a &= sat;
        }
    }
    alive.iter().any(|&a| a != 0)
}

pub fn cnf(num_vars: usize, clauses: &[&[i32]]) -> CnfFormula {
    CnfFormula::from_dimacs_clauses(num_vars, clauses).unwrap()
}

pub fn lit(d: i32) -> Lit {
    Lit::from_dimacs(d)
}

pub fn lits(ds: &[i32]) -> Vec<Lit> {
    ds.iter().map(|&d| lit(d)).collect()
}

pub fn sorted(mut v: Vec<Lit>) -> Vec<i32> {
    v.sort();
    v.into_iter().map(Lit::to_dimacs).collect()
}

pub fn sorted_dimacs(ds: &[i32]) -> Vec<i32> {
    sorted(lits(ds))
}

/// Random 3-CNF with distinct variables per clause.
pub fn random_3cnf<R: Rng>(rng: &mut R, n: usize, m: usize) -> CnfFormula {
    let mut f = CnfFormula::new(n);
    for _ in 0..m {
        let vars = rand::seq::index::sample(rng, n, 3);
        let c: Vec<Lit> = vars.iter().map(|v| Var::new(v).lit(rng.gen())).collect();
        f.add_clause(Clause::new(c).unwrap());
    }
    f
}

/// `x_i` of the conflict-graph example.
pub const fn x(i: i32) -> i32 {
    i
}

/// `y_j` of the conflict-graph example.
pub const fn y(j: i32) -> i32 {
    13 + j
}

/// Otherwise unconstrained variable used to open an empty decision level.
pub const DUMMY: i32 = 20;

/// Clauses (1)-(13) of the conflict-graph example over `x1..x13` and
/// `y1..y6`, with clause (11) as `!x11 | !x12`, plus helper clauses so that a
/// decision script reproduces the stated levels: `!y2` at level 1, `y3, y4,
/// !y6` at level 2, an empty level 3, `!y1, y5` at level 4 and `x1` at 5.
pub fn example_conflict() -> (CnfFormula, Vec<Lit>) {
    let f = cnf(
        20,
        &[
            &[y(1), -x(1), x(2)],
            &[-x(1), -x(3)],
            &[y(2), -x(1), x(4)],
            &[-y(3), -x(2), x(3), -x(4), x(5)],
            &[y(1), -x(5), -x(6)],
            &[-x(5), x(7)],
            &[x(6), -x(7), x(8)],
            &[-y(3), -y(4), -x(5), -x(9)],
            &[-y(4), x(9), -x(10)],
            &[-y(5), y(6), -x(8), x(9), x(11)],
            &[-x(11), -x(12)],
            &[x(10), -x(11), x(13)],
            &[x(12), -x(13)],
            &[-y(3), y(4)],
            &[-y(3), -y(6)],
            &[y(1), y(5)],
        ],
    );
    let script = lits(&[-y(2), y(3), DUMMY, -y(1), x(1)]);
    (f, script)
}

/// The seven clauses whose only DIP is `{x2, x5}`.
pub fn example_naive_miss() -> (CnfFormula, Vec<Lit>) {
    let f = cnf(
        7,
        &[
            &[-1, 2],
            &[-1, 3],
            &[-1, 4],
            &[-3, -4, 5],
            &[-2, 6],
            &[-2, 7],
            &[-5, -6, -7],
        ],
    );
    (f, lits(&[1]))
}

/// 3x3 grid Tseitin formula with the top-left vertex charged; variable `i`
/// is edge `e_i`. Literals of each clause are listed by descending variable,
/// which fixes the watch order the example's propagation sequence relies on.
pub fn grid_example() -> (CnfFormula, Vec<Lit>) {
    let g = gen::gen_tseitin_grid(3, 3, 0).unwrap();
    let mut f = CnfFormula::new(g.num_vars());
    for c in g.clauses() {
        let mut l = c.lits().to_vec();
        l.reverse();
        f.add_clause(Clause::new(l).unwrap());
    }
    (f, lits(&[1, 2, 6, 7]))
}

/// The six configurations the correctness checks sweep.
pub fn sweep_configs() -> Vec<(&'static str, dipsat::DipConfig)> {
    use dipsat::{DipChoice, DipClauses, DipConfig};
    let base = DipConfig::baseline();
    vec![
        ("dip-off", DipConfig::off()),
        ("baseline", base.clone()),
        (
            "closest",
            DipConfig {
                choice: DipChoice::Closest,
                ..base.clone()
            },
        ),
        (
            "random",
            DipConfig {
                choice: DipChoice::Random,
                ..base.clone()
            },
        ),
        (
            "heuristic",
            DipConfig {
                choice: DipChoice::Heuristic,
                ..base.clone()
            },
        ),
        (
            "one-clause",
            DipConfig {
                clauses: DipClauses::One,
                ..base
            },
        ),
    ]
}

/// Solves with an in-memory proof and checks the verdict against `expected`
/// (when given), the model against the formula and the proof of UNSAT.
pub fn solve_checked(
    f: &CnfFormula,
    cfg: dipsat::SolverConfig,
    expected: Option<bool>,
) -> Result<dipsat::SolveResult, String> {
    use dipsat::{check_proof, ProofLog, Solver, Status};
    let mut s = Solver::new(f, cfg).map_err(|e| e.to_string())?;
    s.set_proof(ProofLog::in_memory());
    let r = s.solve().map_err(|e| e.to_string())?;
    let events = s.take_proof().and_then(ProofLog::into_events).ok_or("no proof")?;
    s.audit()?;
    match r.status {
        Status::Sat => {
            if expected == Some(false) {
                return Err("SAT on an unsatisfiable formula".into());
            }
            let m = r.model.as_ref().ok_or("SAT without model")?;
            if !f.is_satisfied_by(m) {
                return Err("model falsifies a clause".into());
            }
        }
        Status::Unsat => {
            if expected == Some(true) {
                return Err("UNSAT on a satisfiable formula".into());
            }
            check_proof(f, &events).map_err(|e| format!("proof rejected: {e}"))?;
        }
        Status::Unknown => return Err("no verdict".into()),
    }
    Ok(r)
}
