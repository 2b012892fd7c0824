// SPDX-License-Identifier: Apache-2.0
//
// Minimal C ABI over the Clarabel interior-point solver. The caller passes a
// conic program in the standard form
//
//     minimize    q'x
//     subject to  A x + s = b,  s in K
//
// with A given as coordinate triplets and K as an ordered list of cones.

use clarabel::algebra::CscMatrix;
use clarabel::solver::{
    DefaultSettingsBuilder, DefaultSolver, IPSolver, SolverStatus, SupportedConeT,
};
use std::slice;

pub const CF_CONE_ZERO: i32 = 0;
pub const CF_CONE_NONNEGATIVE: i32 = 1;
pub const CF_CONE_SECOND_ORDER: i32 = 2;
pub const CF_CONE_EXPONENTIAL: i32 = 3;
pub const CF_CONE_POWER: i32 = 4;

#[repr(C)]
pub struct CfSettings {
    pub tol_gap_abs: f64,
    pub tol_gap_rel: f64,
    pub tol_feas: f64,
    pub max_iter: u32,
    pub verbose: i32,
}

#[repr(C)]
pub struct CfInfo {
    /// 0 solved, 1 almost solved, 2 primal infeasible, 3 dual infeasible,
    /// 4 iteration/time limit, 5 numerical error or insufficient progress,
    /// 6 setup error.
    pub status: i32,
    pub obj_val: f64,
    pub iterations: u32,
    pub solve_time: f64,
    pub r_prim: f64,
    pub r_dual: f64,
}

fn status_code(status: SolverStatus) -> i32 {
    match status {
        SolverStatus::Solved => 0,
        SolverStatus::AlmostSolved => 1,
        SolverStatus::PrimalInfeasible | SolverStatus::AlmostPrimalInfeasible => 2,
        SolverStatus::DualInfeasible | SolverStatus::AlmostDualInfeasible => 3,
        SolverStatus::MaxIterations | SolverStatus::MaxTime => 4,
        _ => 5,
    }
}

/// # Safety
/// All pointers must reference arrays of the advertised lengths: `q` and
/// `x_out` hold `n` entries, `b`, `s_out` and `z_out` hold `m`, the triplet
/// arrays hold `nnz`, and the cone arrays hold `n_cones`.
#[no_mangle]
pub unsafe extern "C" fn cf_solve(
    n: usize,
    m: usize,
    q: *const f64,
    nnz: usize,
    a_rows: *const usize,
    a_cols: *const usize,
    a_vals: *const f64,
    b: *const f64,
    n_cones: usize,
    cone_types: *const i32,
    cone_dims: *const usize,
    cone_params: *const f64,
    settings: *const CfSettings,
    x_out: *mut f64,
    s_out: *mut f64,
    z_out: *mut f64,
    info: *mut CfInfo,
) -> i32 {
    let info = &mut *info;
    info.status = 6;

    let q = slice::from_raw_parts(q, n).to_vec();
    let b = slice::from_raw_parts(b, m).to_vec();
    let rows = slice::from_raw_parts(a_rows, nnz).to_vec();
    let cols = slice::from_raw_parts(a_cols, nnz).to_vec();
    let vals = slice::from_raw_parts(a_vals, nnz).to_vec();
    let a = CscMatrix::new_from_triplets(m, n, rows, cols, vals);
    let p = CscMatrix::<f64>::zeros((n, n));

    let types = slice::from_raw_parts(cone_types, n_cones);
    let dims = slice::from_raw_parts(cone_dims, n_cones);
    let params = slice::from_raw_parts(cone_params, n_cones);
    let mut cones = Vec::with_capacity(n_cones);
    for i in 0..n_cones {
        let cone = match types[i] {
            CF_CONE_ZERO => SupportedConeT::ZeroConeT(dims[i]),
            CF_CONE_NONNEGATIVE => SupportedConeT::NonnegativeConeT(dims[i]),
            CF_CONE_SECOND_ORDER => SupportedConeT::SecondOrderConeT(dims[i]),
            CF_CONE_EXPONENTIAL => SupportedConeT::ExponentialConeT(),
            CF_CONE_POWER => SupportedConeT::PowerConeT(params[i]),
            _ => return 6,
        };
        cones.push(cone);
    }

    let st = &*settings;
    let built = DefaultSettingsBuilder::default()
        .verbose(st.verbose != 0)
        .max_iter(st.max_iter)
        .tol_gap_abs(st.tol_gap_abs)
        .tol_gap_rel(st.tol_gap_rel)
        .tol_feas(st.tol_feas)
        .presolve_enable(false)
        .build();
    let built = match built {
        Ok(s) => s,
        Err(_) => return 6,
    };

    let mut solver = match DefaultSolver::new(&p, &q, &a, &b, &cones, built) {
        Ok(s) => s,
        Err(_) => return 6,
    };
    solver.solve();

    let sol = &solver.solution;
    slice::from_raw_parts_mut(x_out, n).copy_from_slice(&sol.x);
    slice::from_raw_parts_mut(s_out, m).copy_from_slice(&sol.s);
    slice::from_raw_parts_mut(z_out, m).copy_from_slice(&sol.z);
    info.status = status_code(sol.status);
    info.obj_val = sol.obj_val;
    info.iterations = sol.iterations;
    info.solve_time = sol.solve_time;
    info.r_prim = sol.r_prim;
    info.r_dual = sol.r_dual;
    0
}
