use super::{NumGeomError, TracedCurve};

pub fn write_traced_curve(c: &TracedCurve) -> String {
    serde_json::to_string_pretty(c).expect("traced curve serializes")
}

pub fn read_traced_curve(text: &str) -> Result<TracedCurve, NumGeomError> {
    let c: TracedCurve = serde_json::from_str(text).map_err(|e| NumGeomError::Document(e.to_string()))?;
    if c.step.is_nan() || c.step <= 0.0 {
        return Err(NumGeomError::Document("step must be positive".into()));
    }
    if c.all_points().any(|p| !p.iter().all(|v| v.is_finite())) {
        return Err(NumGeomError::Document("non-finite coordinate".into()));
    }
    Ok(c)
}

/// One `x y z` line per point.
pub fn write_columnar(points: &[[f64; 3]]) -> String {
    let mut out = String::with_capacity(points.len() * 48);
    for p in points {
        out.push_str(&format!("{:.12e} {:.12e} {:.12e}\n", p[0], p[1], p[2]));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numgeom::{CurveComponent, SurfaceKind};

    #[test]
    fn json_round_trip() {
        let c = TracedCurve {
            surface: SurfaceKind::Sphere,
            polynomial: "z".into(),
            step: 0.01,
            seed: 7,
            components: vec![CurveComponent { closed: true, points: vec![[0.0, 0.0, 1.0, 0.0], [0.0, 0.0, 0.0, 1.0]], singular: false }],
        };
        let text = write_traced_curve(&c);
        assert!(text.contains("\"surface\": \"sphere\""));
        assert_eq!(read_traced_curve(&text).unwrap(), c);
    }

    #[test]
    fn missing_singular_flag_defaults() {
        let text = r#"{"surface":"heisenberg","polynomial":"z","step":0.1,"seed":0,"components":[{"closed":false,"points":[[1,2,3,4]]}]}"#;
        let c = read_traced_curve(text).unwrap();
        assert!(!c.components[0].singular);
    }

    #[test]
    fn malformed_document_rejected() {
        assert!(matches!(read_traced_curve("{\"surface\":\"torus\"}"), Err(NumGeomError::Document(_))));
    }

    #[test]
    fn columnar_lines() {
        let s = write_columnar(&[[1.0, 2.0, 3.0], [0.0, -1.0, 0.5]]);
        assert_eq!(s.lines().count(), 2);
        let v: Vec<f64> = s.lines().next().unwrap().split(' ').map(|t| t.parse().unwrap()).collect();
        assert_eq!(v, vec![1.0, 2.0, 3.0]);
    }
}
