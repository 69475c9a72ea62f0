//! Random and structured test matrices. Every generator is a pure function of
//! its seed.

use lcplab_core::classes::{is_e0s_tilde, principal_minor_class, DetectorRegistry, MinorClass};
use lcplab_core::numerics::rat;
use lcplab_core::{Error, RationalMatrix, RationalVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Integer entries of random matrices lie in `-ENTRY_BOUND..=ENTRY_BOUND`.
pub const ENTRY_BOUND: i64 = 3;
pub const DEFAULT_BUDGET: usize = 20_000;

#[derive(Debug, Error)]
pub enum GenerateError {
    #[error("no {class} matrix of order {n} found in {tried} draws")]
    BudgetExhausted { class: String, n: usize, tried: usize },
    #[error(transparent)]
    Core(#[from] Error),
}

fn random_int_matrix(rng: &mut impl Rng, n: usize) -> RationalMatrix {
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|_| (0..n).map(|_| rng.gen_range(-ENTRY_BOUND..=ENTRY_BOUND)).collect())
        .collect();
    RationalMatrix::from_i64_rows(&rows).expect("square")
}

/// Draws integer matrices until one belongs to `class` (any registered class
/// name), or returns the first draw when `class` is `None`.
pub fn generate_random(
    registry: &DetectorRegistry,
    class: Option<&str>,
    n: usize,
    seed: u64,
    budget: usize,
) -> Result<RationalMatrix, GenerateError> {
    if n == 0 {
        return Err(Error::EmptyMatrix.into());
    }
    if let Some(name) = class {
        if registry.get(name).is_none() {
            return Err(Error::UnknownName {
                kind: "class",
                name: name.to_string(),
            }
            .into());
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..budget {
        let a = random_int_matrix(&mut rng, n);
        match class {
            None => return Ok(a),
            Some(name) if registry.detect(name, &a)?.member => return Ok(a),
            Some(_) => {}
        }
    }
    Err(GenerateError::BudgetExhausted {
        class: class.unwrap_or("any").to_string(),
        n,
        tried: budget,
    })
}

/// `[[B, col], [row, 0]]` with `B` in P₀, `col > 0` and `row < 0`. The result
/// is checked with the E₀ˢ-tilde detector before it is returned.
pub fn generate_structured(
    block: &RationalMatrix,
    col: &RationalVector,
    row: &RationalVector,
) -> Result<RationalMatrix, Error> {
    let k = block.dim();
    if col.len() != k || row.len() != k {
        return Err(Error::DimensionMismatch {
            expected: k,
            found: if col.len() != k { col.len() } else { row.len() },
        });
    }
    let class = principal_minor_class(block).class;
    if !matches!(class, MinorClass::P | MinorClass::P0) {
        return Err(Error::Precondition(format!("block is not P0 (class {})", class.name())));
    }
    if col.iter().any(|v| *v <= rat(0)) {
        return Err(Error::Precondition("column must be strictly positive".into()));
    }
    if row.iter().any(|v| *v >= rat(0)) {
        return Err(Error::Precondition("row must be strictly negative".into()));
    }
    let n = k + 1;
    let mut a = RationalMatrix::zeros(n);
    for i in 0..k {
        for j in 0..k {
            a[(i, j)] = block[(i, j)].clone();
        }
        a[(i, k)] = col[i].clone();
        a[(k, i)] = row[i].clone();
    }
    let verdict = is_e0s_tilde(&a);
    if !verdict.member {
        let detail = verdict.violation.map(|v| v.describe()).unwrap_or_default();
        return Err(Error::InternalInconsistency(format!(
            "structured matrix is not E0s-tilde: {detail}\n{a}"
        )));
    }
    Ok(a)
}

/// A structured matrix of order `n` with a random P₀ block of order `n - 1`
/// and random border entries of magnitude 1 to 3.
pub fn random_structured(registry: &DetectorRegistry, n: usize, seed: u64) -> Result<RationalMatrix, GenerateError> {
    if n < 2 {
        return Err(Error::Precondition("structured matrices have order at least 2".into()).into());
    }
    let block = generate_random(registry, Some("P0"), n - 1, seed, DEFAULT_BUDGET)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let col = RationalVector((0..n - 1).map(|_| rat(rng.gen_range(1..=ENTRY_BOUND))).collect());
    let row = RationalVector((0..n - 1).map(|_| rat(-rng.gen_range(1..=ENTRY_BOUND))).collect());
    Ok(generate_structured(&block, &col, &row)?)
}
