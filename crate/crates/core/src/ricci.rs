//! Ricci components of diagonal left-invariant metrics.

use serde::{Deserialize, Serialize};

use crate::algebra::TripleShape;
use crate::structconst::StructureTable;
use crate::{Error, Result};

/// Positive scale per module: the metric is `sum x_i B|_{m_i}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct MetricParams(Vec<f64>);

impl MetricParams {
    pub fn new(scales: Vec<f64>) -> Result<Self> {
        if let Some((index, &value)) = scales
            .iter()
            .enumerate()
            .find(|&(_, &v)| !(v > 0.0 && v.is_finite()))
        {
            return Err(Error::NonPositiveScale { index, value });
        }
        Ok(MetricParams(scales))
    }

    pub fn ones(len: usize) -> Self {
        MetricParams(vec![1.0; len])
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn scaled(&self, c: f64) -> Result<Self> {
        MetricParams::new(self.0.iter().map(|v| v * c).collect())
    }
}

impl TryFrom<Vec<f64>> for MetricParams {
    type Error = Error;

    fn try_from(v: Vec<f64>) -> Result<Self> {
        MetricParams::new(v)
    }
}

impl From<MetricParams> for Vec<f64> {
    fn from(m: MetricParams) -> Vec<f64> {
        m.0
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RicciVector {
    pub components: Vec<f64>,
    /// Mean of the components.
    pub einstein_constant_estimate: f64,
    /// `max |r_k - mean| / |mean|`.
    pub residual: f64,
}

impl RicciVector {
    pub fn from_components(components: Vec<f64>) -> Self {
        let mean = components.iter().sum::<f64>() / components.len() as f64;
        let spread = components
            .iter()
            .map(|r| (r - mean).abs())
            .fold(0.0, f64::max);
        let residual = if spread == 0.0 {
            0.0
        } else {
            spread / mean.abs()
        };
        RicciVector {
            components,
            einstein_constant_estimate: mean,
            residual,
        }
    }
}

/// Relative spread of the Ricci components around their mean.
pub fn einstein_residual(r: &RicciVector) -> f64 {
    r.residual
}

/// Ricci components from the structure table:
///
/// `r_k = 1/(2x_k) + 1/(4d_k) sum x_k/(x_j x_i) (kji) - 1/(2d_k) sum x_j/(x_k x_i) (jki)`.
pub fn ricci_general(table: &StructureTable, metric: &MetricParams) -> Result<RicciVector> {
    let m = table.len();
    if metric.len() != m {
        return Err(Error::LengthMismatch {
            expected: m,
            got: metric.len(),
        });
    }
    let x = metric.as_slice();
    let components = (0..m)
        .map(|k| {
            let d = table.dims()[k] as f64;
            let mut plus = 0.0;
            let mut minus = 0.0;
            for j in 0..m {
                for i in 0..m {
                    let kji = table.get(k, j, i);
                    if kji != 0.0 {
                        plus += x[k] / (x[j] * x[i]) * kji;
                        minus += x[j] / (x[k] * x[i]) * kji;
                    }
                }
            }
            1.0 / (2.0 * x[k]) + plus / (4.0 * d) - minus / (2.0 * d)
        })
        .collect();
    Ok(RicciVector::from_components(components))
}

/// Closed-form Ricci components for the three-factor ansatz
/// `y1 B|sp(k1) + y2 B|sp(k2) + y3 B|sp(k3) + y4 B|m1 + y5 B|m2 + y6 B|m3`,
/// in the module order `sp(k1), sp(k2), sp(k3), m1, m2, m3`.
pub fn ricci_closed_form(shape: TripleShape, y: &MetricParams) -> Result<RicciVector> {
    if y.len() != 6 {
        return Err(Error::LengthMismatch {
            expected: 6,
            got: y.len(),
        });
    }
    let y: [f64; 6] = y.as_slice().try_into().expect("length checked");
    Ok(RicciVector::from_components(
        closed_form_components(shape, &y).to_vec(),
    ))
}

/// Unchecked closed form, used in solver inner loops.
pub(crate) fn closed_form_components(shape: TripleShape, y: &[f64; 6]) -> [f64; 6] {
    let (k1, k2, k3) = (shape.k1 as f64, shape.k2 as f64, shape.k3 as f64);
    let c = 4.0 * (k1 + k2 + k3 + 1.0);
    let [y1, y2, y3, y4, y5, y6] = *y;
    [
        (k1 + 1.0) / (c * y1) + k2 * y1 / (c * y4 * y4) + k3 * y1 / (c * y5 * y5),
        (k2 + 1.0) / (c * y2) + k1 * y2 / (c * y4 * y4) + k3 * y2 / (c * y6 * y6),
        (k3 + 1.0) / (c * y3) + k1 * y3 / (c * y5 * y5) + k2 * y3 / (c * y6 * y6),
        1.0 / (2.0 * y4) + k3 / c * (y4 / (y5 * y6) - y5 / (y4 * y6) - y6 / (y4 * y5))
            - ((2.0 * k1 + 1.0) * y1 + (2.0 * k2 + 1.0) * y2) / (2.0 * c * y4 * y4),
        1.0 / (2.0 * y5) + k2 / c * (y5 / (y4 * y6) - y4 / (y5 * y6) - y6 / (y4 * y5))
            - ((2.0 * k1 + 1.0) * y1 + (2.0 * k3 + 1.0) * y3) / (2.0 * c * y5 * y5),
        1.0 / (2.0 * y6) + k1 / c * (y6 / (y4 * y5) - y4 / (y5 * y6) - y5 / (y4 * y6))
            - ((2.0 * k2 + 1.0) * y2 + (2.0 * k3 + 1.0) * y3) / (2.0 * c * y6 * y6),
    ]
}
