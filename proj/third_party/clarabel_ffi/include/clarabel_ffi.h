// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>

extern "C" {

enum {
  CF_CONE_ZERO = 0,
  CF_CONE_NONNEGATIVE = 1,
  CF_CONE_SECOND_ORDER = 2,
  CF_CONE_EXPONENTIAL = 3,
  CF_CONE_POWER = 4,
};

struct CfSettings {
  double tol_gap_abs;
  double tol_gap_rel;
  double tol_feas;
  uint32_t max_iter;
  int32_t verbose;
};

struct CfInfo {
  int32_t status;
  double obj_val;
  uint32_t iterations;
  double solve_time;
  double r_prim;
  double r_dual;
};

int cf_solve(std::size_t n, std::size_t m, const double* q, std::size_t nnz,
             const std::size_t* a_rows, const std::size_t* a_cols,
             const double* a_vals, const double* b, std::size_t n_cones,
             const int32_t* cone_types, const std::size_t* cone_dims,
             const double* cone_params, const CfSettings* settings,
             double* x_out, double* s_out, double* z_out, CfInfo* info);
}
