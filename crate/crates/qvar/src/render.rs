//! Deterministic number and report formatting.
//!
//! Every number that reaches a file or standard output goes through
//! [`fmt_sig12`], so identical inputs produce byte-identical artifacts
//! regardless of locale or platform defaults.

use qvar_core::verify::MinimizationResult;
use qvar_core::BoundReport;

/// Formats with 12 significant digits: plain decimal notation while the
/// rounded exponent lies in `[−4, 11]`, scientific notation outside.
pub fn fmt_sig12(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    // Round to 12 significant digits first; the exponent of the *rounded*
    // value decides the notation (0.99999… may carry over).
    let sci = format!("{:.11e}", x);
    let exp: i32 = sci[sci.find('e').expect("exponent marker") + 1..]
        .parse()
        .expect("float exponent");
    if (-4..=11).contains(&exp) {
        format!("{:.*}", (11 - exp) as usize, x)
    } else {
        sci
    }
}

fn opt_sig12(v: Option<f64>) -> String {
    v.map_or_else(|| "n/a".to_string(), fmt_sig12)
}

/// Fixed-order aligned table of one bound comparison.
pub fn report_table(report: &BoundReport) -> String {
    let mut rows: Vec<(String, String)> = vec![
        ("sum_of_variances".into(), fmt_sig12(report.sum_of_variances)),
        ("lb_new".into(), fmt_sig12(report.lb_new)),
        ("fb_chen".into(), opt_sig12(report.fb_chen)),
        ("pb1_plus".into(), fmt_sig12(report.pb1_plus)),
        ("pb2_minus".into(), fmt_sig12(report.pb2_minus)),
    ];
    for p in &report.pairwise_product_bounds {
        rows.push((
            format!("robertson({},{})", p.i, p.j),
            fmt_sig12(p.robertson),
        ));
        rows.push((
            format!("schrodinger({},{})", p.i, p.j),
            fmt_sig12(p.schrodinger),
        ));
    }
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in rows {
        out.push_str(&format!("{k:<width$}  {v}\n"));
    }
    out
}

/// One-line JSON object mirroring the report field names.
pub fn report_json(report: &BoundReport) -> String {
    let fb = report
        .fb_chen
        .map_or_else(|| "null".to_string(), fmt_sig12);
    let pairs: Vec<String> = report
        .pairwise_product_bounds
        .iter()
        .map(|p| {
            format!(
                "{{\"i\":{},\"j\":{},\"robertson\":{},\"schrodinger\":{}}}",
                p.i,
                p.j,
                fmt_sig12(p.robertson),
                fmt_sig12(p.schrodinger)
            )
        })
        .collect();
    format!(
        "{{\"sum_of_variances\":{},\"lb_new\":{},\"fb_chen\":{},\"pb1_plus\":{},\"pb2_minus\":{},\"pairwise_product_bounds\":[{}]}}",
        fmt_sig12(report.sum_of_variances),
        fmt_sig12(report.lb_new),
        fb,
        fmt_sig12(report.pb1_plus),
        fmt_sig12(report.pb2_minus),
        pairs.join(",")
    )
}

/// Fixed-format minimization summary.
pub fn minimization_text(target: &str, res: &MinimizationResult) -> String {
    format!(
        "target            {}\nmin_value         {}\nargmin            {}, {}, {}\ngrid_step         {}\nrefine_iterations {}\n",
        target,
        fmt_sig12(res.min_value),
        fmt_sig12(res.argmin.x),
        fmt_sig12(res.argmin.y),
        fmt_sig12(res.argmin.z),
        fmt_sig12(res.grid_step),
        res.refine_iterations
    )
}
