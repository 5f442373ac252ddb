//! Report construction: every subcommand's output is assembled from the
//! section builders here, which fill a JSON map and a text buffer in
//! parallel so both formats always agree.
//!
//! Conventions: facet indices are 0-based in JSON and rendered through
//! their labels (`F1…Fm` by default) in text; lattice integers and
//! rationals are JSON strings (`"-3"`, `"5/2"`), combinatorial counts are
//! JSON numbers; `chen_ruan` maps degree strings to dimensions in
//! ascending degree order.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};
use serde_json::{json, Map, Value};

use crate::chenruan::{box_elements, chen_ruan_betti};
use crate::chern::{almost_complex_necessary, top_chern_number, total_chern_class, vertex_signs};
use crate::cohomology::{cohomology_ring, linear_forms, minimal_nonfaces, CohomologyRing};
use crate::model::model_equivalent;
use crate::polytope::index_vector;
use crate::zlattice::{Int, IntegerMatrix, Rat};

use super::file::LoadedModel;
use super::CliError;

pub type JsonMap = Map<String, Value>;

pub fn int_str(x: &Int) -> String {
    x.to_string()
}

pub fn rat_str(x: &Rat) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

fn json_int_slice(xs: &[Int]) -> Value {
    Value::Array(xs.iter().map(|x| Value::String(int_str(x))).collect())
}

fn json_rat_slice(xs: &[Rat]) -> Value {
    Value::Array(xs.iter().map(|x| Value::String(rat_str(x))).collect())
}

/// A matrix as a JSON list of columns (matching the `lambda` convention).
fn json_columns(m: &IntegerMatrix) -> Value {
    Value::Array((0..m.cols()).map(|j| json_int_slice(&m.column(j))).collect())
}

fn facet_name(labels: &[String], j: usize) -> &str {
    &labels[j]
}

fn facet_set_text(labels: &[String], set: &BTreeSet<usize>) -> String {
    let names: Vec<&str> = set.iter().map(|&j| facet_name(labels, j)).collect();
    format!("{{{}}}", names.join(","))
}

fn group_text(factors: &[Int]) -> String {
    if factors.is_empty() {
        "trivial".to_string()
    } else {
        factors
            .iter()
            .map(|d| format!("Z/{d}"))
            .collect::<Vec<_>>()
            .join(" x ")
    }
}

/// Formats a ring class over the standard basis of its degree.
fn class_text(ring: &CohomologyRing, class: &crate::cohomology::Class) -> String {
    let terms = ring.express(class);
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (coeff, mono)) in terms.iter().enumerate() {
        let mono_s = mono.to_string();
        let one = coeff.is_integer() && coeff.numer().abs() == Int::from(1);
        let body = if mono_s == "1" {
            rat_str(&coeff.abs())
        } else if one {
            mono_s
        } else {
            format!("{}*{}", rat_str(&coeff.abs()), mono_s)
        };
        if i == 0 {
            if coeff.is_negative() {
                out.push('-');
            }
        } else if coeff.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        out.push_str(&body);
    }
    out
}

pub fn section_meta(loaded: &LoadedModel, json: &mut JsonMap, text: &mut String) {
    let p = loaded.model.polytope();
    json.insert("name".into(), Value::String(loaded.name.clone()));
    json.insert("dimension".into(), json!(p.dim()));
    json.insert("facets".into(), json!(p.facet_count()));
    json.insert(
        "facet_labels".into(),
        Value::Array(
            loaded
                .facet_labels
                .iter()
                .map(|l| Value::String(l.clone()))
                .collect(),
        ),
    );
    json.insert("vertices".into(), json!(p.vertex_count()));
    text.push_str(&format!(
        "model: {}\ndimension: {} (orbifold real dimension {})\nfacets: {} ({})\nvertices: {}\n",
        loaded.name,
        p.dim(),
        2 * p.dim(),
        p.facet_count(),
        loaded.facet_labels.join(", "),
        p.vertex_count()
    ));
}

pub fn section_validate(loaded: &LoadedModel, json: &mut JsonMap, text: &mut String) {
    let model = &loaded.model;
    json.insert("valid".into(), Value::Bool(true));
    json.insert("primitive".into(), Value::Bool(model.is_primitive()));
    let singular = model.singular_faces();
    let mut faces_json = Vec::new();
    text.push_str(&format!(
        "valid: yes\nprimitive: {}\nsingular faces: {}\n",
        if model.is_primitive() { "yes" } else { "no" },
        singular.len()
    ));
    for data in &singular {
        let mut entry = JsonMap::new();
        entry.insert(
            "facets".into(),
            Value::Array(
                data.face
                    .facet_set
                    .iter()
                    .map(|&j| json!(j))
                    .collect(),
            ),
        );
        entry.insert("codim".into(), json!(data.face.codim));
        entry.insert("order".into(), Value::String(int_str(data.group.order())));
        entry.insert(
            "invariant_factors".into(),
            json_int_slice(data.group.invariant_factors()),
        );
        faces_json.push(Value::Object(entry));
        text.push_str(&format!(
            "  {} codim {}: {}\n",
            facet_set_text(&loaded.facet_labels, &data.face.facet_set),
            data.face.codim,
            group_text(data.group.invariant_factors())
        ));
    }
    json.insert("singular_faces".into(), Value::Array(faces_json));
}

pub fn section_pi1(loaded: &LoadedModel, json: &mut JsonMap, text: &mut String) {
    let group = loaded.model.pi1_orb();
    let mut entry = JsonMap::new();
    entry.insert("order".into(), Value::String(int_str(group.order())));
    entry.insert(
        "invariant_factors".into(),
        json_int_slice(group.invariant_factors()),
    );
    entry.insert("trivial".into(), Value::Bool(group.is_trivial()));
    json.insert("pi1".into(), Value::Object(entry));
    text.push_str(&format!(
        "orbifold fundamental group: {}\n",
        group_text(group.invariant_factors())
    ));
}

pub fn section_cover(loaded: &LoadedModel, json: &mut JsonMap, text: &mut String) {
    let (cover, basis) = loaded.model.universal_cover_model();
    let mut entry = JsonMap::new();
    entry.insert("basis".into(), json_columns(&basis));
    entry.insert("lambda".into(), json_columns(cover.char_matrix()));
    entry.insert("manifold".into(), Value::Bool(cover.is_manifold()));
    json.insert("cover".into(), Value::Object(entry));
    text.push_str(&format!(
        "universal cover sublattice basis (columns): {}\n",
        basis
    ));
    text.push_str("cover characteristic vectors:\n");
    for j in 0..cover.char_matrix().cols() {
        let col = cover.char_matrix().column(j);
        let parts: Vec<String> = col.iter().map(Int::to_string).collect();
        text.push_str(&format!(
            "  {} -> ({})\n",
            facet_name(&loaded.facet_labels, j),
            parts.join(", ")
        ));
    }
    text.push_str(&format!(
        "cover is a manifold: {}\n",
        if cover.is_manifold() { "yes" } else { "no" }
    ));
}

pub fn section_quotient(loaded: &LoadedModel, json: &mut JsonMap, text: &mut String) {
    let manifold = loaded.model.is_manifold();
    let global_quotient = loaded.model.is_global_quotient();
    json.insert("manifold".into(), Value::Bool(manifold));
    json.insert("global_quotient".into(), Value::Bool(global_quotient));
    text.push_str(&format!(
        "manifold: {}\nglobal quotient: {}\n",
        if manifold { "yes" } else { "no" },
        if global_quotient { "yes" } else { "no" }
    ));
}

pub fn section_betti(
    loaded: &LoadedModel,
    json: &mut JsonMap,
    text: &mut String,
) -> Result<(), CliError> {
    let p = loaded.model.polytope();
    let h = p.h_vector();
    json.insert(
        "betti".into(),
        Value::Array(h.iter().map(|&x| json!(x)).collect()),
    );
    let parts: Vec<String> = h.iter().map(|x| x.to_string()).collect();
    text.push_str(&format!(
        "betti numbers b_0, b_2, …, b_{}: {} (odd degrees vanish)\n",
        2 * p.dim(),
        parts.join(" ")
    ));

    if let Some(real) = &loaded.realization {
        if real.functional().is_some() {
            let idx = index_vector(p, real)
                .map_err(|e| CliError::Validation(format!("index computation failed: {e}")))?;
            // Cross-check: the index distribution must reproduce the
            // h-vector.
            let mut counts = vec![0i64; p.dim() + 1];
            for &i in &idx {
                counts[i] += 1;
            }
            if counts != h {
                return Err(CliError::Internal(format!(
                    "index distribution {counts:?} disagrees with the h-vector {h:?}"
                )));
            }
            json.insert(
                "index_vector".into(),
                Value::Array(idx.iter().map(|&i| json!(i)).collect()),
            );
            let parts: Vec<String> = idx.iter().map(|i| i.to_string()).collect();
            text.push_str(&format!("vertex index vector: {}\n", parts.join(" ")));
        }
    }
    Ok(())
}

pub fn section_ring(
    loaded: &LoadedModel,
    max_degree: Option<usize>,
    json: &mut JsonMap,
    text: &mut String,
) -> Result<CohomologyRing, CliError> {
    let model = &loaded.model;
    let ring = cohomology_ring(model).map_err(|e| CliError::Internal(e.to_string()))?;
    let labels = &loaded.facet_labels;

    let mut entry = JsonMap::new();
    entry.insert(
        "dims".into(),
        Value::Array(ring.dims().iter().map(|&d| json!(d)).collect()),
    );
    let nonfaces = minimal_nonfaces(model.polytope());
    entry.insert(
        "minimal_nonfaces".into(),
        Value::Array(
            nonfaces
                .iter()
                .map(|set| Value::Array(set.iter().map(|&j| json!(j)).collect()))
                .collect(),
        ),
    );
    let forms = linear_forms(model);
    entry.insert(
        "linear_forms".into(),
        Value::Array(forms.iter().map(|row| json_int_slice(row)).collect()),
    );

    let top = ring.rank();
    let shown_top = max_degree.unwrap_or(top).min(top);
    let mut basis_json = Vec::new();
    for d in 0..=shown_top {
        basis_json.push(Value::Array(
            ring.standard_basis(d)
                .iter()
                .map(|m| Value::String(m.to_string()))
                .collect(),
        ));
    }
    entry.insert("standard_basis".into(), Value::Array(basis_json));

    let mut facet_classes = Vec::new();
    for j in 0..model.polytope().facet_count() {
        facet_classes.push(json_rat_slice(&ring.facet_class(j).coeffs));
    }
    entry.insert("facet_classes".into(), Value::Array(facet_classes));
    json.insert("ring".into(), Value::Object(entry));

    let dims: Vec<String> = ring.dims().iter().map(|d| d.to_string()).collect();
    text.push_str(&format!(
        "ring dimensions by degree 0..{}: {}\n",
        top,
        dims.join(" ")
    ));
    if nonfaces.is_empty() {
        text.push_str("minimal nonfaces: none\n");
    } else {
        let parts: Vec<String> = nonfaces
            .iter()
            .map(|set| facet_set_text(labels, set))
            .collect();
        text.push_str(&format!("minimal nonfaces: {}\n", parts.join(", ")));
    }
    for (i, row) in forms.iter().enumerate() {
        let mut terms = String::new();
        let mut first = true;
        for (j, c) in row.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let var = format!("w{}", j + 1);
            let body = if mag == Int::from(1) {
                var
            } else {
                format!("{mag}*{var}")
            };
            if first {
                if c.is_negative() {
                    terms.push('-');
                }
                first = false;
            } else if c.is_negative() {
                terms.push_str(" - ");
            } else {
                terms.push_str(" + ");
            }
            terms.push_str(&body);
        }
        if first {
            terms.push('0');
        }
        text.push_str(&format!("linear form theta_{}: {}\n", i + 1, terms));
    }
    for d in 0..=shown_top {
        let names: Vec<String> = ring
            .standard_basis(d)
            .iter()
            .map(|m| m.to_string())
            .collect();
        text.push_str(&format!(
            "standard basis degree {}: {}\n",
            d,
            if names.is_empty() {
                "(empty)".to_string()
            } else {
                names.join(", ")
            }
        ));
    }
    if shown_top < top {
        text.push_str(&format!(
            "(standard bases above degree {shown_top} omitted)\n"
        ));
    }
    for j in 0..model.polytope().facet_count() {
        let class = ring.facet_class(j);
        text.push_str(&format!(
            "facet class w{} ({}): {}\n",
            j + 1,
            facet_name(labels, j),
            class_text(&ring, &class)
        ));
    }
    Ok(ring)
}

pub fn section_chern(
    loaded: &LoadedModel,
    orientation: i8,
    json: &mut JsonMap,
    text: &mut String,
) -> Result<(), CliError> {
    let Some(real) = &loaded.realization else {
        return Err(CliError::MissingRealization);
    };
    let model = &loaded.model;
    let table = vertex_signs(model, real, orientation)
        .map_err(|e| CliError::Validation(format!("vertex sign computation failed: {e}")))?;
    let top = top_chern_number(&table);
    let check = almost_complex_necessary(&table);
    let ring = cohomology_ring(model).map_err(|e| CliError::Internal(e.to_string()))?;
    let chern = total_chern_class(model, &ring);

    let mut entry = JsonMap::new();
    entry.insert("orientation".into(), json!(orientation));
    entry.insert("signs".into(), json_int_slice(&table.signs));
    entry.insert("top_chern".into(), Value::String(rat_str(&top)));
    let mut ac = JsonMap::new();
    ac.insert("satisfied".into(), Value::Bool(check.satisfied));
    ac.insert(
        "orientation".into(),
        match check.compatible_orientation {
            Some(o) => json!(o),
            None => Value::Null,
        },
    );
    entry.insert("almost_complex".into(), Value::Object(ac));
    let mut total = Vec::new();
    for (d, class) in chern.iter().enumerate() {
        let mut cj = JsonMap::new();
        cj.insert("degree".into(), json!(d));
        cj.insert("coeffs".into(), json_rat_slice(&class.coeffs));
        cj.insert(
            "monomials".into(),
            Value::Array(
                ring.standard_basis(d)
                    .iter()
                    .map(|m| Value::String(m.to_string()))
                    .collect(),
            ),
        );
        total.push(Value::Object(cj));
    }
    entry.insert("total_chern".into(), Value::Array(total));
    json.insert("chern".into(), Value::Object(entry));

    text.push_str(&format!(
        "orientation: {}\n",
        if orientation == 1 { "+1" } else { "-1" }
    ));
    text.push_str("vertex signs sigma(v):\n");
    let p = model.polytope();
    for v in 0..p.vertex_count() {
        text.push_str(&format!(
            "  vertex {} {}: {}\n",
            v,
            facet_set_text(&loaded.facet_labels, p.vertex_facet_set(v)),
            table.signs[v]
        ));
    }
    text.push_str(&format!("top chern number: {}\n", rat_str(&top)));
    match check.compatible_orientation {
        Some(o) => text.push_str(&format!(
            "almost complex necessary condition: satisfied (orientation {})\n",
            if o == 1 { "+1" } else { "-1" }
        )),
        None => text.push_str(
            "almost complex necessary condition: not satisfied (mixed signs)\n",
        ),
    }
    for (d, class) in chern.iter().enumerate() {
        text.push_str(&format!("total chern c_{}: {}\n", d, class_text(&ring, class)));
    }
    Ok(())
}

pub fn section_chenruan(
    loaded: &LoadedModel,
    include_sectors: bool,
    json: &mut JsonMap,
    text: &mut String,
) {
    let model = &loaded.model;
    let table = chen_ruan_betti(model);
    let mut table_json = JsonMap::new();
    for (degree, count) in table.entries() {
        table_json.insert(rat_str(degree), json!(count));
    }
    json.insert("chen_ruan".into(), Value::Object(table_json));
    text.push_str("chen-ruan betti table:\n");
    for (degree, count) in table.entries() {
        text.push_str(&format!("  degree {}: {}\n", rat_str(degree), count));
    }

    if include_sectors {
        let sectors = box_elements(model);
        let mut sectors_json = Vec::new();
        text.push_str(&format!("twisted sectors: {}\n", sectors.len()));
        for s in &sectors {
            let mut entry = JsonMap::new();
            entry.insert(
                "facets".into(),
                Value::Array(s.face.facet_set.iter().map(|&j| json!(j)).collect()),
            );
            entry.insert("codim".into(), json!(s.face.codim));
            entry.insert("rep".into(), json_int_slice(&s.rep));
            entry.insert("q".into(), json_rat_slice(&s.q));
            entry.insert("iota".into(), Value::String(rat_str(&s.iota)));
            entry.insert("shift".into(), Value::String(rat_str(&s.shift)));
            sectors_json.push(Value::Object(entry));
            let qs: Vec<String> = s.q.iter().map(rat_str).collect();
            text.push_str(&format!(
                "  {} q = ({}), age {}, degree shift {}\n",
                facet_set_text(&loaded.facet_labels, &s.face.facet_set),
                qs.join(", "),
                rat_str(&s.iota),
                rat_str(&s.shift)
            ));
        }
        json.insert("sectors".into(), Value::Array(sectors_json));
    }
}

/// Renders the model-equivalence comparison of two files.
pub fn render_equiv(
    a: &LoadedModel,
    b: &LoadedModel,
    allow_sign_flips: bool,
    json_format: bool,
) -> Result<String, CliError> {
    let result = model_equivalent(&a.model, &b.model, allow_sign_flips)
        .map_err(|e| CliError::Validation(e.to_string()))?;
    let mut json = JsonMap::new();
    let mut text = String::new();
    json.insert("first".into(), Value::String(a.name.clone()));
    json.insert("second".into(), Value::String(b.name.clone()));
    json.insert("allow_sign_flips".into(), Value::Bool(allow_sign_flips));
    text.push_str(&format!(
        "first: {}\nsecond: {}\nsign flips allowed: {}\n",
        a.name,
        b.name,
        if allow_sign_flips { "yes" } else { "no" }
    ));
    match result {
        None => {
            json.insert("equivalent".into(), Value::Bool(false));
            json.insert("theta".into(), Value::Null);
            json.insert("signs".into(), Value::Null);
            text.push_str("equivalent: no\n");
        }
        Some(eq) => {
            json.insert("equivalent".into(), Value::Bool(true));
            let rows: Vec<Value> = (0..eq.theta.rows())
                .map(|r| json_int_slice(eq.theta.row(r)))
                .collect();
            json.insert("theta".into(), Value::Array(rows));
            json.insert(
                "signs".into(),
                Value::Array(eq.signs.iter().map(|&s| json!(s)).collect()),
            );
            text.push_str(&format!("equivalent: yes\nchange of basis theta: {}\n", eq.theta));
            let signs: Vec<String> = eq
                .signs
                .iter()
                .map(|s| if *s >= 0 { "+1".into() } else { "-1".to_string() })
                .collect();
            text.push_str(&format!("facet signs: {}\n", signs.join(" ")));
        }
    }
    Ok(finish(json, text, json_format))
}

/// Final formatting: pretty JSON or the accumulated text.
pub fn finish(json: JsonMap, text: String, json_format: bool) -> String {
    if json_format {
        let mut s = serde_json::to_string_pretty(&Value::Object(json))
            .expect("report serialization cannot fail");
        s.push('\n');
        s
    } else {
        text
    }
}
