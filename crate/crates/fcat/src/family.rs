//! Deterministic seed grid for the p = 3 positive-control family: all
//! Eisenstein integers a + b*rho with 1 <= b < a <= height, in row order.
//! Unit and degenerate seeds are skipped; every returned tuple has had the
//! defining identity re-verified exactly by the generator.

use fcat_core::{gen_p3, EisensteinInt, Error, P3Tuple};

#[derive(Clone, Debug)]
pub struct FamilyTuple {
    pub seed: (i64, i64),
    pub tuple: P3Tuple,
}

pub fn enumerate(q: u64, height: u64) -> Result<Vec<FamilyTuple>, Error> {
    let mut out = Vec::new();
    for a in 2..=height as i64 {
        for b in 1..a {
            match gen_p3(&EisensteinInt::new(a, b), q) {
                Ok(tuple) => out.push(FamilyTuple { seed: (a, b), tuple }),
                Err(Error::UnitInput | Error::DegenerateSum) => continue,
                Err(e) => return Err(e),
            }
        }
    }
    Ok(out)
}
