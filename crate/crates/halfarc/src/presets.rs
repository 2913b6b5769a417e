//! Named 2-group presets shipped as presentation files, the single source
//! of truth shared by the tests and the CLI. Names follow the usual
//! small-group notation: `C2^4`, `D8xC2^2`, `Q16`, `SD32`, `H7`, ...

use crate::error::{Error, Result};
use crate::fp::{parse_presentation, regular_representation, todd_coxeter, Presentation, Word};
use crate::group::PermGroup;
use crate::perm::Permutation;

macro_rules! preset_table {
    ($(($name:literal, $file:literal)),* $(,)?) => {
        const PRESETS: &[(&str, &str)] = &[
            $(($name, include_str!(concat!("../data/presets/", $file)))),*
        ];
    };
}

preset_table![
    // concentric (admit a tuple)
    ("C2^1", "c2_1.pres"),
    ("C2^2", "c2_2.pres"),
    ("C2^3", "c2_3.pres"),
    ("C2^4", "c2_4.pres"),
    ("C2^5", "c2_5.pres"),
    ("C2^6", "c2_6.pres"),
    ("C2^7", "c2_7.pres"),
    ("C2^8", "c2_8.pres"),
    ("D8", "d8.pres"),
    ("D8xC2", "d8_c2_1.pres"),
    ("D8xC2^2", "d8_c2_2.pres"),
    ("D8xC2^3", "d8_c2_3.pres"),
    ("D8xC2^4", "d8_c2_4.pres"),
    ("D8xC2^5", "d8_c2_5.pres"),
    ("D8xD8", "d8_d8.pres"),
    ("H7", "h7.pres"),
    ("H7xC2", "h7_c2.pres"),
    // not concentric, order <= 32
    ("C4", "c4.pres"),
    ("C8", "c8.pres"),
    ("C16", "c16.pres"),
    ("C32", "c32.pres"),
    ("C4xC2", "c4_c2.pres"),
    ("C4xC2^2", "c4_c2_2.pres"),
    ("C4xC2^3", "c4_c2_3.pres"),
    ("C4xC4", "c4_c4.pres"),
    ("C8xC2", "c8_c2.pres"),
    ("C8xC2^2", "c8_c2_2.pres"),
    ("C8xC4", "c8_c4.pres"),
    ("C16xC2", "c16_c2.pres"),
    ("Q8", "q8.pres"),
    ("Q8xC2", "q8_c2.pres"),
    ("Q8xC2^2", "q8_c2_2.pres"),
    ("Q16", "q16.pres"),
    ("Q32", "q32.pres"),
    ("SD16", "sd16.pres"),
    ("SD32", "sd32.pres"),
    ("M16", "m16.pres"),
    ("M32", "m32.pres"),
    ("D16", "d16.pres"),
    ("D16xC2", "d16_c2.pres"),
    ("D32", "d32.pres"),
];

/// All preset names, in table order.
pub fn preset_names() -> Vec<&'static str> {
    PRESETS.iter().map(|&(n, _)| n).collect()
}

/// Presets that admit a concentric tuple (the classification list at
/// order ≤ 2⁸).
pub fn concentric_preset_names() -> Vec<&'static str> {
    preset_names().into_iter().take(17).collect()
}

/// Presets of order ≤ 2⁵ that admit no tuple (exhaustive search target).
pub fn non_concentric_preset_names() -> Vec<&'static str> {
    preset_names().into_iter().skip(17).collect()
}

/// Raw presentation text for a preset (what the data file contains).
pub fn preset_text(name: &str) -> Result<&'static str> {
    PRESETS
        .iter()
        .find(|&&(n, _)| n == name)
        .map(|&(_, text)| text)
        .ok_or_else(|| Error::UnknownPreset(name.to_string()))
}

/// Parsed presentation for a preset.
pub fn load_preset(name: &str) -> Result<Presentation> {
    parse_presentation(preset_text(name)?)
}

/// Regular representation of a preset, with the generator images
/// (the defining tuple) in presentation order.
pub fn preset_group(name: &str) -> Result<(PermGroup, Vec<Permutation>)> {
    preset_group_capped(name, 65536)
}

pub fn preset_group_capped(
    name: &str,
    max_cosets: usize,
) -> Result<(PermGroup, Vec<Permutation>)> {
    let p = load_preset(name)?;
    let table = todd_coxeter(&p, &[], max_cosets)?;
    let (group, _) = regular_representation(&table)?;
    Ok((group, table.action().to_vec()))
}

/// The shift-symmetric family ⟨a₁,…,a_m⟩ with aᵢ² = 1,
/// (aᵢaⱼ)² = 1 for |i−j| ≤ m−3, (a₁a_{m−1})² = a₃, (a₂a_m)² = a₄ and
/// (a₁a_m)² = a_{m−2}. For m = 7 and 8 this matches the `H7` and `H7xC2`
/// preset files (asserted by a test).
pub fn shifted_family(m: usize) -> Result<Presentation> {
    if m < 7 {
        return Err(Error::Invalid(format!(
            "shifted family needs m >= 7, got {m}"
        )));
    }
    let sq = |w: &Word| w.pow(2);
    let pair = |i: usize, j: usize| Word::gen(i - 1).concat(&Word::gen(j - 1));
    let mut relators = Vec::new();
    for i in 1..=m {
        relators.push(sq(&Word::gen(i - 1)));
    }
    for i in 1..=m {
        for j in (i + 1)..=m {
            if j - i <= m - 3 {
                relators.push(sq(&pair(i, j)));
            }
        }
    }
    relators.push(sq(&pair(1, m - 1)).concat(&Word::gen(2).inverse()));
    relators.push(sq(&pair(2, m)).concat(&Word::gen(3).inverse()));
    relators.push(sq(&pair(1, m)).concat(&Word::gen(m - 3).inverse()));
    Presentation::new(m, relators)
}

/// A known concentric tuple for a preset, as words in its generators;
/// `None` for presets with no shipped tuple (searched instead).
pub fn preset_concentric_tuple(name: &str) -> Result<Option<Vec<Word>>> {
    let p = load_preset(name)?;
    let m_gens = p.generator_count();
    let basis = || Some((0..m_gens).map(Word::gen).collect::<Vec<_>>());
    Ok(match name {
        n if n.starts_with("C2^") => basis(),
        "H7" | "H7xC2" => basis(),
        // (b, a^2, c_1, ..., c_k, ab) for D8 x C2^k with a = g1, b = g2
        n if n == "D8" || n.starts_with("D8xC2") => {
            let mut tuple = vec![Word::gen(1), Word::gen(0).pow(2)];
            tuple.extend((2..m_gens).map(Word::gen));
            tuple.push(Word::gen(0).concat(&Word::gen(1)));
            Some(tuple)
        }
        _ => None,
    })
}
