//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Every export takes and returns plain strings: comma-separated dimensions
//! and chip counts in, JSON out. The `*_json` functions hold the logic and
//! are what the native tests call.

use rookgon::scramble::{scramble_order, star_scramble, t_star_scramble, uniform_scramble, OrderReport};
use rookgon::{dhar_burn, is_winnable, rank, rook_graph, v_reduce, Divisor, MultiGraph, VertexSet};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Rank is skipped above this degree to keep the page responsive.
const RANK_DEGREE_LIMIT: i64 = 16;
/// Largest board accepted for scramble orders.
const SCRAMBLE_VERTEX_LIMIT: usize = 36;

fn parse_list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>, String> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| format!("bad {what} entry {t:?}")))
        .collect()
}

fn host(dims: &str) -> Result<MultiGraph, String> {
    rook_graph(&parse_list(dims, "dimension")?).map_err(|e| e.to_string())
}

fn divisor(g: &MultiGraph, chips: &str) -> Result<Divisor, String> {
    Divisor::new(parse_list(chips, "chip")?).checked_for(g).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct BurnView {
    burnt: VertexSet,
    unburnt: VertexSet,
    /// No set avoiding the source can fire legally.
    reduced: bool,
}

pub fn burn_json(dims: &str, chips: &str, source: usize) -> Result<String, String> {
    let g = host(dims)?;
    let d = divisor(&g, chips)?;
    let b = dhar_burn(&g, &d, source).map_err(|e| e.to_string())?;
    let view = BurnView { burnt: b.burnt, unburnt: b.unburnt, reduced: b.unburnt.is_empty() };
    serde_json::to_string(&view).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct DivisorView {
    degree: i64,
    reduced: Vec<i64>,
    winnable: bool,
    /// `None` when the degree is above the demo limit.
    rank: Option<i64>,
}

pub fn divisor_json(dims: &str, chips: &str, base: usize) -> Result<String, String> {
    let g = host(dims)?;
    let d = divisor(&g, chips)?;
    let reduced = v_reduce(&g, &d, base).map_err(|e| e.to_string())?.reduced;
    let rank = if d.degree() <= RANK_DEGREE_LIMIT { Some(rank(&g, &d).map_err(|e| e.to_string())?) } else { None };
    let view = DivisorView { degree: d.degree(), reduced: reduced.chips, winnable: is_winnable(&g, &d), rank };
    serde_json::to_string(&view).map_err(|e| e.to_string())
}

/// `family` is `uniform` (connected `k`-sets), `star` (`k` ignored) or `tstar`.
pub fn scramble_json(family: &str, dims: &str, k: usize) -> Result<String, String> {
    let s = match family {
        "tstar" => t_star_scramble(),
        "star" => match parse_list::<usize>(dims, "dimension")?.as_slice() {
            [n, m] if n * m <= SCRAMBLE_VERTEX_LIMIT => star_scramble(*n, *m).map_err(|e| e.to_string())?,
            [_, _] => return Err(format!("boards above {SCRAMBLE_VERTEX_LIMIT} cells are too slow for the page")),
            _ => return Err("the star scramble needs two dimensions".into()),
        },
        "uniform" => {
            let g = host(dims)?;
            if g.vertex_count() > SCRAMBLE_VERTEX_LIMIT {
                return Err(format!("boards above {SCRAMBLE_VERTEX_LIMIT} cells are too slow for the page"));
            }
            uniform_scramble(&g, k).map_err(|e| e.to_string())?
        }
        other => return Err(format!("unknown family {other:?}")),
    };
    let report: OrderReport = scramble_order(&s).map_err(|e| e.to_string())?;
    serde_json::to_string(&report).map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn burn(dims: &str, chips: &str, source: usize) -> Result<String, JsError> {
    burn_json(dims, chips, source).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = divisorInfo)]
pub fn divisor_info(dims: &str, chips: &str, base: usize) -> Result<String, JsError> {
    divisor_json(dims, chips, base).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = scrambleOrder)]
pub fn scramble_order_js(family: &str, dims: &str, k: usize) -> Result<String, JsError> {
    scramble_json(family, dims, k).map_err(|e| JsError::new(&e))
}
