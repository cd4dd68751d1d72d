//! End-to-end smoke: build a code over Z_9, run the full analysis, and
//! print the report as JSON. Exits nonzero if any headline number is off.

use zps_core::code::LinearCode;
use zps_core::report::{analyze, AnalysisLimits};
use zps_core::ring::RingParams;

fn main() {
    let ring = RingParams::new(3, 2).expect("3^2 is a valid modulus");
    let code = LinearCode::from_integer_rows(ring, 1, &[vec![3]]).expect("valid rows");
    let report = analyze(&code, &AnalysisLimits::default()).expect("analysis succeeds");
    println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));

    assert_eq!(report.size, Some(3));
    let bounds = report.bounds.as_ref().expect("bounds computed");
    assert_eq!(bounds.d_lee, 3);
    assert!(bounds.is_mldr);
    assert!(report.duality.is_self_dual);
    let kernel = report.kernel.as_ref().expect("kernel computed");
    assert_eq!(kernel.dim_m, 1);
    eprintln!("smoke: all headline values check out");
}
