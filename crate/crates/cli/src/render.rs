//! Human-readable rendering of report sections. The JSON path bypasses
//! this module entirely.

use std::fmt::Write;

use gkzcheck_core::report::{
    CharacteristicSection, FaceAuditVerdict, FaceInfo, FamilyVerdict, GradedPath,
    HolonomicityVerdict, HomogenizationVerdict, ParameterTheoremVerdict, ToricSection,
    TransversalityReport, VerificationReport,
};

fn flag(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "FAIL"
    }
}

pub fn matrix_line(matrix: &[Vec<i64>]) -> String {
    let rows: Vec<String> = matrix
        .iter()
        .map(|r| {
            let cells: Vec<String> = r.iter().map(i64::to_string).collect();
            format!("[{}]", cells.join(","))
        })
        .collect();
    format!("[{}]", rows.join(","))
}

pub fn toric(out: &mut String, s: &ToricSection) {
    let _ = writeln!(out, "toric ideal ({}):", flag(s.pass));
    if s.groebner_basis.is_empty() {
        let _ = writeln!(out, "  groebner basis   (zero ideal)");
    } else {
        let _ = writeln!(out, "  groebner basis   {}", s.groebner_basis.join(", "));
    }
    for v in &s.kernel_basis {
        let _ = writeln!(out, "  kernel vector    ({})", v.join(", "));
    }
    let _ = writeln!(
        out,
        "  dim k[u]/I_A     {} (rank = {})",
        s.dimension, s.rank
    );
    let _ = writeln!(
        out,
        "  A-homogeneity    {}{}",
        flag(s.homogeneity.pass),
        s.homogeneity
            .counterexample
            .as_deref()
            .map(|c| format!(" ({c})"))
            .unwrap_or_default()
    );
    let _ = writeln!(
        out,
        "  standard graded  {}",
        if s.standard_graded { "yes" } else { "no" }
    );
}

pub fn parameter(out: &mut String, v: &ParameterTheoremVerdict) {
    let drop = v
        .drop
        .map(|d| d.to_string())
        .unwrap_or_else(|| "-".to_string());
    let _ = writeln!(
        out,
        "parameter theorem ({}): dim k[x,u]/I_A = {} (expect n+rank = {}), with forms = {} (expect n = {}), drop = {} (rank = {}), system of parameters: {}",
        flag(v.pass),
        v.dim_product,
        v.n + v.rank,
        v.dim_cut,
        v.n,
        drop,
        v.rank,
        if v.sop_certified { "certified" } else { "not applicable" }
    );
}

pub fn holonomicity(out: &mut String, v: &HolonomicityVerdict) {
    let path = match v.graded_path {
        GradedPath::Direct => "direct",
        GradedPath::Homogenized => "homogenized",
    };
    let _ = writeln!(
        out,
        "holonomicity ({}): char dim = {} (n = {}), path = {}, routes consistent = {}",
        flag(v.pass),
        v.dimension,
        v.n,
        path,
        v.routes_consistent
    );
}

pub fn homogenization(out: &mut String, v: &HomogenizationVerdict) {
    if v.trivially_consistent {
        let _ = writeln!(
            out,
            "homogenization (pass): trivially consistent (standard graded)"
        );
    } else {
        let _ = writeln!(
            out,
            "homogenization ({}): xi-level contraction equal = {}, x-extended equal = {}",
            flag(v.pass),
            v.xi_level_equal.unwrap_or(false),
            v.x_extended_equal.unwrap_or(false)
        );
    }
}

pub fn family(out: &mut String, v: &FamilyVerdict) {
    let degrees: Vec<String> = v.samples.iter().map(|s| s.degree.to_string()).collect();
    let common = v
        .common_degree
        .map(|d| d.to_string())
        .unwrap_or_else(|| "-".to_string());
    let _ = writeln!(
        out,
        "family ({}): fiber degrees [{}], common = {}, parameter-free generators = {}",
        flag(v.pass),
        degrees.join(", "),
        common,
        v.parameter_free_generators
    );
    for s in &v.samples {
        let _ = writeln!(
            out,
            "  x = ({}) -> degree {}{}",
            s.point.join(", "),
            s.degree,
            if s.resamples > 0 {
                format!(" after {} resamples", s.resamples)
            } else {
                String::new()
            }
        );
    }
}

pub fn face_audit(out: &mut String, v: &FaceAuditVerdict) {
    let _ = writeln!(out, "face audit ({}):", flag(v.pass));
    for e in &v.entries {
        let cols: Vec<String> = e.columns.iter().map(usize::to_string).collect();
        let _ = writeln!(
            out,
            "  tau = {{{}}}  dim = {} (expect {}) {}",
            cols.join(","),
            e.computed,
            e.expected,
            flag(e.pass)
        );
    }
}

pub fn transversality(out: &mut String, v: &TransversalityReport) {
    let _ = writeln!(
        out,
        "transversality ({}): {}/{} instances over {} faces ({} per face), boundary refusal diagnosed = {}",
        flag(v.pass),
        v.passed,
        v.instances,
        v.faces,
        v.samples_per_face,
        v.boundary_refusal_diagnosed
    );
}

pub fn faces(out: &mut String, infos: &[FaceInfo]) {
    let _ = writeln!(out, "faces ({}):", infos.len());
    for f in infos {
        let cols: Vec<String> = f.columns.iter().map(usize::to_string).collect();
        let ind: Vec<String> = f.indicator.iter().map(u8::to_string).collect();
        let _ = writeln!(
            out,
            "  tau = {{{}}}  dim = {}  normal = ({})  indicator = ({})",
            cols.join(","),
            f.dim,
            f.normal.join(", "),
            ind.join(",")
        );
    }
}

pub fn characteristic(out: &mut String, s: &CharacteristicSection) {
    let path = match s.graded_path {
        GradedPath::Direct => "direct",
        GradedPath::Homogenized => "homogenized",
    };
    let _ = writeln!(
        out,
        "characteristic ideal: dim = {} (n = {}), path = {}, routes consistent = {}",
        s.dimension, s.n, path, s.routes_consistent
    );
    for g in &s.generators {
        let _ = writeln!(out, "  {g}");
    }
}

pub fn check(report: &VerificationReport) -> String {
    let mut out = String::new();
    let label = report.label.as_deref().unwrap_or("input");
    let _ = writeln!(
        out,
        "== check: {} ({}x{}) ==",
        label, report.d, report.n
    );
    let _ = writeln!(out, "matrix            {}", matrix_line(&report.matrix));
    let _ = writeln!(
        out,
        "n = {}, d = {}, rank = {}, standard graded = {}",
        report.n,
        report.d,
        report.rank,
        if report.standard_graded { "yes" } else { "no" }
    );
    if let Some(beta) = &report.beta {
        let _ = writeln!(out, "beta (echoed)     ({})", beta.join(", "));
    }
    toric(&mut out, &report.toric);
    parameter(&mut out, &report.parameter_theorem);
    holonomicity(&mut out, &report.holonomicity);
    homogenization(&mut out, &report.homogenization);
    family(&mut out, &report.family);
    face_audit(&mut out, &report.face_audit);
    transversality(&mut out, &report.transversality);
    let total: u64 = report.timing_ms.values().sum();
    let _ = writeln!(
        out,
        "RESULT            {} ({} ms)",
        if report.all_pass { "PASS" } else { "FAIL" },
        total
    );
    out
}
