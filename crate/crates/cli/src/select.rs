//! Algebra selection and `key=value` parsing.

use std::collections::BTreeMap;
use std::path::Path;

use engel_core::algebra::rational::parse_rational;
use engel_core::algebra::{Assignment, Var};
use engel_core::complex::AlgebraRef;
use engel_core::lie::{class_type, family, AlgebraSpec, ClassParams, LieAlgebra4};

use crate::{CliError, JacobiSelector, Selector};

pub struct Chosen {
    pub alg: LieAlgebra4,
    pub source: AlgebraRef,
    pub label: String,
}

pub fn pairs(items: &[String]) -> Result<BTreeMap<String, String>, CliError> {
    let mut out = BTreeMap::new();
    for item in items {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("expected name=value, got `{item}`")))?;
        let (k, v) = (k.trim(), v.trim());
        parse_rational(v)?;
        if out.insert(k.to_string(), v.to_string()).is_some() {
            return Err(CliError::Usage(format!("`{k}` given twice")));
        }
    }
    Ok(out)
}

pub fn assignment(items: &[String]) -> Result<Assignment, CliError> {
    pairs(items)?
        .iter()
        .map(|(k, v)| Ok((Var::new(k), parse_rational(v)?)))
        .collect()
}

pub fn class_params(items: &[String]) -> Result<(ClassParams, BTreeMap<String, String>), CliError> {
    let map = pairs(items)?;
    let mut params = ClassParams::default();
    for (k, v) in &map {
        let v = Some(parse_rational(v)?);
        match k.as_str() {
            "a" => params.a = v,
            "b" => params.b = v,
            _ => return Err(CliError::Usage(format!("unknown type parameter `{k}` (expected a or b)"))),
        }
    }
    Ok((params, map))
}

pub fn family_choice(id: usize) -> Result<Chosen, CliError> {
    Ok(Chosen { alg: family(id)?, source: AlgebraRef::family(id), label: format!("family {id}") })
}

pub fn type_choice(id: usize, items: &[String]) -> Result<Chosen, CliError> {
    let (params, map) = class_params(items)?;
    let mut label = format!("type {id}");
    if !map.is_empty() {
        let kv: Vec<String> = map.iter().map(|(k, v)| format!("{k}={v}")).collect();
        label += &format!(" ({})", kv.join(", "));
    }
    Ok(Chosen { alg: class_type(id, &params)?, source: AlgebraRef::class_type(id, map), label })
}

pub fn inline_choice(path: &Path) -> Result<Chosen, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let name = path.file_stem().and_then(|s| s.to_str()).unwrap_or("inline");
    let alg = AlgebraSpec::from_json(&text)?.build(name)?;
    Ok(Chosen { alg, source: AlgebraRef::inline(name), label: format!("inline {name}") })
}

fn reject_params(items: &[String]) -> Result<(), CliError> {
    if items.is_empty() {
        Ok(())
    } else {
        Err(CliError::Usage("--param only applies to --type".into()))
    }
}

/// Every algebra named by the selector, in command-line order.
pub fn all(sel: &Selector, params: &[String]) -> Result<Vec<Chosen>, CliError> {
    if let Some(path) = &sel.inline {
        reject_params(params)?;
        return Ok(vec![inline_choice(path)?]);
    }
    if !sel.family.is_empty() {
        reject_params(params)?;
        return sel.family.iter().map(|&id| family_choice(id)).collect();
    }
    sel.class_type.iter().map(|&id| type_choice(id, params)).collect()
}

pub fn one(sel: &Selector, params: &[String]) -> Result<Chosen, CliError> {
    let mut v = all(sel, params)?;
    if v.len() != 1 {
        return Err(CliError::Usage("this command takes a single algebra".into()));
    }
    Ok(v.remove(0))
}

/// `None` selects the ansatz.
pub fn jacobi(sel: &JacobiSelector, params: &[String]) -> Result<Option<Chosen>, CliError> {
    let s = Selector {
        family: sel.family.into_iter().collect(),
        class_type: sel.class_type.into_iter().collect(),
        inline: sel.inline.clone(),
    };
    if sel.ansatz {
        reject_params(params)?;
        return Ok(None);
    }
    one(&s, params).map(Some)
}
