use trimwind::geom::{CurveSpan, Point2, RationalBezierSegment};
use trimwind::rng::SplitMix64;
use trimwind::winding::{compute_winding, control_polygon_winding_baseline, WindingOutcome};

fn pt(u: f64, v: f64) -> Point2 { Point2::new(u, v) }

fn main() {
    let mut rng = SplitMix64::new(2121);
    let mut tested = 0;
    while tested < 100 {
        let p0: Vec<Point2> = (0..4).map(|_| pt(rng.next_f64(), rng.next_f64())).collect();
        let seg = RationalBezierSegment::polynomial(p0.clone()).unwrap();
        let q = pt(rng.range(-0.2, 1.2), rng.range(-0.2, 1.2));
        let ours = compute_winding(q, &CurveSpan::full(&seg), seg.derivative_bound(), 1e-6);
        let baseline = control_polygon_winding_baseline(q, &CurveSpan::full(&seg), 1e-6);
        if let (Ok(WindingOutcome::Value(a)), Ok(WindingOutcome::Value(b))) = (&ours, &baseline) {
            tested += 1;
            if (a - b).abs() > 1e-9 {
                println!("MISMATCH ellipse={a} baseline={b}");
                println!("ctrl: {:?}", p0);
                println!("p: {:?}", q);
                // dense oracle
                let path = trimwind::winding::BezierPath::new(vec![seg.clone()]).unwrap();
                let oracle = trimwind::winding::polyline_winding_oracle(q, &path, 200_000);
                println!("oracle: {:?}", oracle);
                return;
            }
        }
    }
    println!("all agree");
}
