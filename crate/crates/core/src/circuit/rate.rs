use num_rational::Ratio;

use crate::gram_schmidt::GsResult;

/// Information qubits and ebits consumed per channel use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RateReport {
    pub info: Ratio<i64>,
    pub ebit: Ratio<i64>,
}

/// `((k+c)/n, c/n)` for a code that encodes `k + c = n - a - c` information
/// qubits per frame of `n` with `c` ebits.
pub fn rate_report(gs: &GsResult) -> RateReport {
    let n = gs.n() as i64;
    let (c, a) = (gs.c as i64, gs.a as i64);
    RateReport {
        info: Ratio::new(n - a - c, n),
        ebit: Ratio::new(c, n),
    }
}
