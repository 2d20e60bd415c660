//! Constructions for every block family, dispatched by [`construct`].

use hw_blocks::{
    matching_split, one_factorization_complete, orient_split, search_factors, BlockError,
};
use hw_digraph::{Certificate, Factor, FactorKind, Trace};

use crate::doubled::{
    blowup_cycle_pair, blowup_hamilton_pair, copy_major_to_part_major, quadrupled_cycle_c4_factors,
};
use crate::explicit::{
    alternating_cycle, alternating_walk, backward_walk, base_cycle, blowup_i_even_cycles,
    blowup_i_odd_cycles, gamma_cycle_pair, interleaved_walk, layer_walk, zigzag_cycle,
};
use crate::gate::certify;
use crate::points::{
    cycle, cycles_factor, layer_matching, reflection_layers, rev, residual, shifted,
    with_translate,
};
use crate::printed::{printed_factors, Printed};
use crate::{BlockFamily, ConstructionError};

const SEARCH_NODES: u64 = 100_000;
const SEARCH_RESTARTS: u32 = 12;

/// Factors of a block plus a short name of the case used.
type Built = (Vec<Factor>, &'static str);

/// Builds the factorization of `family`'s host for cycle length `m` with
/// `r` factors of the first kind, verified by the independent checker.
pub fn construct(family: BlockFamily, m: u32, r: u32) -> Result<Certificate, ConstructionError> {
    let unsupported = |reason: &str| ConstructionError::Unsupported {
        family,
        m,
        r,
        reason: reason.to_string(),
    };
    if !family.accepts_m(m) {
        return Err(unsupported("cycle length outside the family"));
    }
    if !family.supported(m).contains(&r) {
        return Err(unsupported("no construction for this count"));
    }
    let (factors, case) = build(family, m, r).map_err(|e| match e {
        ConstructionError::Block(BlockError::InvalidParameter(reason)) => unsupported(&reason),
        other => other,
    })?;
    let trace = Trace::new(family.id()).param("m", m).param("r", r).param("case", case);
    certify(family, m, r, factors, trace)
}

fn build(family: BlockFamily, m: u32, r: u32) -> Result<Built, ConstructionError> {
    match family {
        BlockFamily::BlowupK2VsDouble => blowup_k2_double(m, r),
        BlockFamily::GammaK2VsDouble => gamma_k2_double(m, r),
        BlockFamily::BlowupIK2VsDouble => blowup_i_k2_double(m, r),
        BlockFamily::BlowupK2VsCycle => blowup_k2_cycle(m, r),
        BlockFamily::BlowupIK2VsCycle => {
            let (mut fs, case) = blowup_k2_cycle(m, r - 1)?;
            fs.insert(0, layer_matching(m));
            Ok((fs, case))
        }
        BlockFamily::GammaK2VsCycle => gamma_k2_cycle(m, r),
        BlockFamily::GammaCycleVsDouble => gamma_cycle_double(m, r),
        BlockFamily::BlowupICycleVsDouble => blowup_i_cycle_double(m, r),
        BlockFamily::BlowupCycleVsDouble => blowup_cycle_double(m, r),
        BlockFamily::C4BlowupI8 => c4_blowup_i8(r),
        BlockFamily::K12 => k12(r),
        BlockFamily::K43 => k43(r),
    }
}

/// Splits the first `k` symmetric factors into K2*-factors and orients the rest.
fn split_pairs(pairs: &[Factor], k: usize) -> Result<Vec<Factor>, ConstructionError> {
    let mut out = Vec::with_capacity(2 * pairs.len());
    for (i, f) in pairs.iter().enumerate() {
        let halves = if i < k { matching_split(f)? } else { orient_split(f)? };
        out.extend(halves);
    }
    Ok(out)
}

/// `C_m*[2]`: the two Hamilton cycles of `C_m[2]`, each split into two
/// K2*-factors or two directed `2m`-cycle factors.
fn blowup_k2_double(m: u32, r: u32) -> Result<Built, ConstructionError> {
    let pair = blowup_hamilton_pair(m)?;
    Ok((split_pairs(&pair, (r / 2) as usize)?, "doubled-hamilton-split"))
}

/// `C_m*[2]`: the two `C_m`-factors of `C_m[2]`, split the same way.
fn blowup_k2_cycle(m: u32, r: u32) -> Result<Built, ConstructionError> {
    let pair = blowup_cycle_pair(m)?;
    Ok((split_pairs(&pair, (r / 2) as usize)?, "doubled-cycle-split"))
}

fn search_block(family: BlockFamily, m: u32, spec: &[(FactorKind, usize)]) -> Result<Vec<Factor>, ConstructionError> {
    let host = family.host(m).digraph()?;
    Ok(search_factors(&host, spec, SEARCH_NODES, SEARCH_RESTARTS)?)
}

/// Symmetric cycle factors of `Γ_m*` found by search, then oriented.
fn gamma_oriented(m: u32, len: u32) -> Result<Vec<Factor>, ConstructionError> {
    let sym = search_block(BlockFamily::GammaK2VsDouble, m, &[(FactorKind::SymCycles(len), 3)])?;
    split_pairs(&sym, 0)
}

fn gamma_k2_double(m: u32, r: u32) -> Result<Built, ConstructionError> {
    if r == 0 {
        return Ok((gamma_oriented(m, 2 * m)?, "search-oriented"));
    }
    let (mut fs, _) = blowup_k2_double(m, r - 2)?;
    fs.push(reflection_layers(m, true));
    fs.push(reflection_layers(m, false));
    Ok((fs, "blowup-plus-reflection"))
}

fn blowup_i_k2_double(m: u32, r: u32) -> Result<Built, ConstructionError> {
    if r % 2 == 1 {
        let (mut fs, _) = blowup_k2_double(m, r - 1)?;
        fs.insert(0, layer_matching(m));
        return Ok((fs, "blowup-plus-layer-matching"));
    }
    let mi = m as i64;
    let len = 2 * m;
    if m % 2 == 1 && m >= 5 {
        let mut fs: Vec<Factor> = blowup_i_odd_cycles(mi)
            .iter()
            .map(|c| cycles_factor(len, [cycle(m, c)]))
            .collect();
        let host = BlockFamily::BlowupIK2VsDouble.host(m).digraph()?;
        let rest = residual(&host, &fs, len);
        fs.push(rest);
        Ok((fs, "explicit-odd"))
    } else if m % 2 == 0 && m >= 6 {
        let fs = blowup_i_even_cycles(mi)
            .iter()
            .map(|c| cycles_factor(len, [cycle(m, c)]))
            .collect();
        Ok((fs, "explicit-even"))
    } else {
        Err(BlockError::InvalidParameter("all-2m-cycle factorization needs m >= 5".into()).into())
    }
}

/// The symmetric `m`-cycle factor `C ∪ (C + (1, 0))` with both orientations.
fn symmetric_translate(m: u32, points: &[(i64, i64)]) -> Factor {
    let f = with_translate(m, points);
    let back = f.reversed();
    Factor::new(FactorKind::SymCycles(m), f.arcs.into_iter().chain(back.arcs))
}

fn gamma_k2_cycle(m: u32, r: u32) -> Result<Built, ConstructionError> {
    let mi = m as i64;
    match r {
        0 => {
            let (fs, case) = gamma_cycle_double(m, 6)?;
            Ok((fs, case))
        }
        1 | 3 => {
            let host = BlockFamily::GammaK2VsCycle.host(m).digraph()?;
            let f0 = reflection_layers(m, true);
            let c0 = base_cycle(mi);
            let c1 = alternating_cycle(mi);
            let c2 = zigzag_cycle(mi);
            let f3 = cycles_factor(m, [cycle(m, &c1), rev(cycle(m, &shifted(&c1)))]);
            let f4 = cycles_factor(m, [cycle(m, &c2), rev(cycle(m, &shifted(&c2)))]);
            let mut fs = vec![f0];
            if r == 1 {
                let f1 = with_translate(m, &c0);
                let f2 = f1.reversed();
                fs.extend([f1, f2]);
            } else {
                fs.extend(matching_split(&symmetric_translate(m, &c0))?);
            }
            fs.extend([f3, f4]);
            let rest = residual(&host, &fs, m);
            fs.push(rest);
            Ok((fs, if r == 1 { "explicit-r1" } else { "explicit-r3" }))
        }
        _ => {
            let (mut fs, _) = blowup_k2_cycle(m, r - 2)?;
            fs.push(reflection_layers(m, true));
            fs.push(reflection_layers(m, false));
            Ok((fs, "blowup-plus-reflection"))
        }
    }
}

fn gamma_cycle_double(m: u32, r: u32) -> Result<Built, ConstructionError> {
    if r == 0 {
        return Ok((gamma_oriented(m, 2 * m)?, "search-oriented"));
    }
    if m % 4 == 0 {
        return Ok((gamma_oriented(m, m)?, "search-oriented"));
    }
    let mi = m as i64;
    let host = BlockFamily::GammaCycleVsDouble.host(m).digraph()?;
    let c0 = base_cycle(mi);
    let c1 = zigzag_cycle(mi);
    let [c2, c3] = gamma_cycle_pair(mi);
    let f0 = with_translate(m, &c0);
    let f1 = cycles_factor(m, [cycle(m, &c1), rev(cycle(m, &shifted(&c1)))]);
    let f2 = f1.reversed();
    let f3 = with_translate(m, &c2);
    let f4 = with_translate(m, &c3);
    let mut fs = vec![f0, f1, f2, f3, f4];
    let rest = residual(&host, &fs, m);
    fs.push(rest);
    Ok((fs, "explicit"))
}

fn blowup_i_cycle_double(m: u32, r: u32) -> Result<Built, ConstructionError> {
    if r == 0 {
        return blowup_i_k2_double(m, 0);
    }
    let mi = m as i64;
    let len = 2 * m;
    let f1 = with_translate(m, &base_cycle(mi));
    let u = interleaved_walk(mi);
    let f2 = cycles_factor(len, [cycle(m, &u)]);
    let f3 = cycles_factor(len, [cycle(m, &shifted(&u))]);
    if r == 1 {
        let f4 = cycles_factor(len, [cycle(m, &backward_walk(mi))]);
        let host = BlockFamily::BlowupICycleVsDouble.host(m).digraph()?;
        let mut fs = vec![f1, f2, f3, f4];
        let rest = residual(&host, &fs, len);
        fs.push(rest);
        Ok((fs, "explicit-r1"))
    } else {
        let f4 = f1.reversed();
        let c = alternating_cycle(mi);
        let f5 = cycles_factor(m, [rev(cycle(m, &c)), rev(cycle(m, &shifted(&c)))]);
        Ok((vec![f1, f2, f3, f4, f5], "explicit-r3"))
    }
}

fn blowup_cycle_double(m: u32, r: u32) -> Result<Built, ConstructionError> {
    match r {
        0 => blowup_k2_double(m, 0),
        4 => blowup_k2_cycle(m, 0),
        _ => {
            let mi = m as i64;
            let len = 2 * m;
            let c = alternating_cycle(mi);
            let fs = vec![
                cycles_factor(len, [cycle(m, &layer_walk(mi))]),
                cycles_factor(len, [cycle(m, &alternating_walk(mi))]),
                with_translate(m, &base_cycle(mi)).reversed(),
                cycles_factor(m, [rev(cycle(m, &c)), rev(cycle(m, &shifted(&c)))]),
            ];
            Ok((fs, "explicit-r2"))
        }
    }
}

fn c4_blowup_i8(r: u32) -> Result<Built, ConstructionError> {
    match r {
        0 => Ok((printed_factors(Printed::C4BlowupI8R0), "printed")),
        2 => Ok((printed_factors(Printed::C4BlowupI8R2), "printed")),
        _ => {
            let (mut fs, _) = blowup_k2_cycle(4, r - 1)?;
            fs.insert(0, layer_matching(4));
            Ok((fs, "blowup-plus-layer-matching"))
        }
    }
}

/// `K_12*`: printed families for `r ∈ {2, 4}`; odd `r` from `I_12*` plus the
/// five 4-cycle factors of `K_6[2]` (each a round-robin matching of `K_6`
/// blown up), split into K2*-factors or oriented; `r = 0` by search.
fn k12(r: u32) -> Result<Built, ConstructionError> {
    match r {
        2 => Ok((printed_factors(Printed::K12R2), "printed")),
        4 => Ok((printed_factors(Printed::K12R4), "printed")),
        0 => Ok((
            search_block(BlockFamily::K12, 4, &[(FactorKind::Cycles(4), 11)])?,
            "search",
        )),
        _ => {
            let rr = one_factorization_complete(6)?;
            let sym: Vec<Factor> = rr
                .factors
                .iter()
                .map(|f| {
                    let squares: Vec<Vec<u32>> =
                        f.edges.iter().map(|&(x, y)| vec![x, y, 6 + x, 6 + y]).collect();
                    Factor::symmetric_cycles(&squares)
                })
                .collect();
            let mut fs = vec![Factor::double_arcs((0..6).map(|i| (i, 6 + i)))];
            fs.extend(split_pairs(&sym, ((r - 1) / 2) as usize)?);
            Ok((fs, "layer-matching-plus-blown-round-robin"))
        }
    }
}

/// `K_(4:3)* = C_3*[4]`: the printed family for `r = 1`; even `r` from the
/// four 4-cycle factors of `C_3[4]`.
fn k43(r: u32) -> Result<Built, ConstructionError> {
    if r == 1 {
        return Ok((printed_factors(Printed::K43R1), "printed"));
    }
    let map = copy_major_to_part_major(3);
    let sym: Vec<Factor> = quadrupled_cycle_c4_factors(3)?
        .iter()
        .map(|f| f.relabeled(&map).lift())
        .collect();
    Ok((split_pairs(&sym, (r / 2) as usize)?, "quadrupled-triangle"))
}
