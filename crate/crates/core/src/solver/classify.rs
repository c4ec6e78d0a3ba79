use serde::Serialize;

/// Default relative tolerance of the classifier.
pub const DEFAULT_CLASSIFY_TOL: f64 = 1e-8;

/// Result of the naturally-reductive test on a six-parameter metric.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub naturally_reductive: bool,
    /// Reported equality case (1 to 4) when naturally reductive.
    pub case: Option<u8>,
    /// Every case that holds.
    pub cases: Vec<u8>,
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs())
}

/// Equality cases for `(y1, .., y6)`, reported as the first that holds:
/// 1. `y1 = y2 = y4`, `y5 = y6`;
/// 2. `y2 = y3 = y6`, `y4 = y5`;
/// 3. `y1 = y3 = y5`, `y4 = y6`;
/// 4. `y4 = y5 = y6`.
///
/// When all four hold the metric is bi-invariant and is reported as case 4.
/// Equalities are relative, so the result is invariant under scaling.
pub fn classify(y: &[f64; 6], tol: f64) -> Classification {
    let [y1, y2, y3, y4, y5, y6] = *y;
    let eq3 = |a, b, c| close(a, b, tol) && close(b, c, tol) && close(a, c, tol);
    let cases = [
        eq3(y1, y2, y4) && close(y5, y6, tol),
        eq3(y2, y3, y6) && close(y4, y5, tol),
        eq3(y1, y3, y5) && close(y4, y6, tol),
        eq3(y4, y5, y6),
    ];
    let matched: Vec<u8> = (1..=4).filter(|&i| cases[i as usize - 1]).collect();
    let case = if matched.len() == 4 {
        Some(4)
    } else {
        matched.first().copied()
    };
    Classification {
        naturally_reductive: case.is_some(),
        case,
        cases: matched,
    }
}
