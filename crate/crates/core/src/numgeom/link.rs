use super::NumGeomError;

/// Polygonal curve in ℝ³. A closed polyline has an implicit segment from
/// the last point back to the first.
#[derive(Clone, Debug, PartialEq)]
pub struct Polyline {
    pub points: Vec<[f64; 3]>,
    pub closed: bool,
}

impl Polyline {
    pub fn closed(points: Vec<[f64; 3]>) -> Self {
        Self { points, closed: true }
    }

    /// `(midpoint, direction)` for every segment.
    fn segments(&self) -> Vec<([f64; 3], [f64; 3])> {
        let n = self.points.len();
        let count = if self.closed { n } else { n.saturating_sub(1) };
        (0..count)
            .map(|i| {
                let a = self.points[i];
                let b = self.points[(i + 1) % n];
                (std::array::from_fn(|k| 0.5 * (a[k] + b[k])), std::array::from_fn(|k| b[k] - a[k]))
            })
            .collect()
    }
}

fn sub(a: &[f64; 3], b: &[f64; 3]) -> [f64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn norm(a: &[f64; 3]) -> f64 {
    (a[0] * a[0] + a[1] * a[1] + a[2] * a[2]).sqrt()
}

fn point_segment_distance(p: &[f64; 3], a: &[f64; 3], b: &[f64; 3]) -> f64 {
    let ab = sub(b, a);
    let ap = sub(p, a);
    let len2 = ab.iter().map(|c| c * c).sum::<f64>();
    let t = if len2 > 0.0 { (ap.iter().zip(&ab).map(|(x, y)| x * y).sum::<f64>() / len2).clamp(0.0, 1.0) } else { 0.0 };
    norm(&sub(p, &[a[0] + t * ab[0], a[1] + t * ab[1], a[2] + t * ab[2]]))
}

fn min_distance(c1: &Polyline, c2: &Polyline) -> f64 {
    let one_way = |a: &Polyline, b: &Polyline| {
        let n = b.points.len();
        a.points
            .iter()
            .map(|p| {
                (0..n)
                    .map(|i| point_segment_distance(p, &b.points[i], &b.points[(i + 1) % n]))
                    .fold(f64::INFINITY, f64::min)
            })
            .fold(f64::INFINITY, f64::min)
    };
    one_way(c1, c2).min(one_way(c2, c1))
}

/// Gauss linking number by the midpoint rule on segment pairs:
/// `(1/4π) Σᵢ Σⱼ (mᵢ − mⱼ)·(dᵢ × dⱼ) / |mᵢ − mⱼ|³`.
///
/// Both curves must be closed and separated by more than ten mean segment
/// lengths.
pub fn linking_number(c1: &Polyline, c2: &Polyline) -> Result<f64, NumGeomError> {
    if !c1.closed || !c2.closed || c1.points.len() < 3 || c2.points.len() < 3 {
        return Err(NumGeomError::OpenCurve);
    }
    let s1 = c1.segments();
    let s2 = c2.segments();
    let mean = (s1.iter().chain(&s2).map(|(_, d)| norm(d)).sum::<f64>()) / (s1.len() + s2.len()) as f64;
    let distance = min_distance(c1, c2);
    if distance <= 10.0 * mean {
        return Err(NumGeomError::CurvesTooClose { distance });
    }
    let mut total = 0.0;
    for (m1, d1) in &s1 {
        for (m2, d2) in &s2 {
            let r = sub(m1, m2);
            let cross = [
                d1[1] * d2[2] - d1[2] * d2[1],
                d1[2] * d2[0] - d1[0] * d2[2],
                d1[0] * d2[1] - d1[1] * d2[0],
            ];
            let rn = norm(&r);
            total += (r[0] * cross[0] + r[1] * cross[1] + r[2] * cross[2]) / (rn * rn * rn);
        }
    }
    Ok(total / (4.0 * std::f64::consts::PI))
}
