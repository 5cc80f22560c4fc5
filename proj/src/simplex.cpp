#include "runpoly/simplex.hpp"

#include <algorithm>
#include <unordered_map>

namespace runpoly {

namespace {

// -x <= 0 up to positive scaling marks x as nonnegative
bool is_nonneg_marker(const LinIneq& row, int* var_out,
                      const std::unordered_map<std::string, int>& idx) {
  if (row.rhs != 0) return false;
  const std::string* var = nullptr;
  Rat coeff;
  for (const auto& [v, c] : row.coeffs) {
    if (c == 0) continue;
    if (var) return false;
    var = &v;
    coeff = c;
  }
  if (!var || coeff >= 0) return false;
  *var_out = idx.at(*var);
  return true;
}

}  // namespace

LpEngine::LpEngine(const HPolytope& poly) { build(poly); }

void LpEngine::build(const HPolytope& poly) {
  vars_ = poly.variables;
  std::unordered_map<std::string, int> idx;
  for (size_t i = 0; i < vars_.size(); ++i) idx[vars_[i]] = static_cast<int>(i);

  std::vector<char> nonneg(vars_.size(), 0);
  std::vector<char> row_dropped(poly.inequalities.size(), 0);
  for (size_t r = 0; r < poly.inequalities.size(); ++r) {
    int v;
    if (is_nonneg_marker(poly.inequalities[r], &v, idx)) {
      nonneg[v] = 1;
      row_dropped[r] = 1;
    }
  }

  std::vector<std::vector<int>> var_cols(vars_.size());
  for (size_t i = 0; i < vars_.size(); ++i) {
    var_cols[i].push_back(static_cast<int>(col_var_.size()));
    col_var_.push_back(static_cast<int>(i));
    col_sign_.push_back(1);
    if (!nonneg[i]) {
      var_cols[i].push_back(static_cast<int>(col_var_.size()));
      col_var_.push_back(static_cast<int>(i));
      col_sign_.push_back(-1);
    }
  }
  struct_cols_ = static_cast<int>(col_var_.size());

  int num_slacks = 0;
  for (size_t r = 0; r < poly.inequalities.size(); ++r)
    if (!row_dropped[r]) ++num_slacks;
  cols_ = struct_cols_ + num_slacks;

  auto new_row = [&](const LinIneq& src, int slack_col) {
    std::vector<Rat> row(cols_ + 1);
    for (const auto& [v, c] : src.coeffs) {
      int vi = idx.at(v);
      for (int col : var_cols[vi]) row[col] += c * col_sign_[col];
    }
    if (slack_col >= 0) row[slack_col] = 1;
    row[cols_] = src.rhs;
    if (row[cols_] < 0)
      for (Rat& x : row) x = -x;
    return row;
  };

  int slack = struct_cols_;
  for (size_t r = 0; r < poly.inequalities.size(); ++r) {
    if (row_dropped[r]) continue;
    T_.push_back(new_row(poly.inequalities[r], slack));
    row_slack_.push_back(slack++);
  }
  for (const auto& eq : poly.equalities) {
    T_.push_back(new_row(eq, -1));
    row_slack_.push_back(-1);
  }
}

void LpEngine::run_phase1() {
  if (phase1_done_) return;
  phase1_done_ = true;

  const int rows = static_cast<int>(T_.size());
  basis_.assign(rows, -1);
  int art_start = cols_;
  int n_art = 0;
  for (int i = 0; i < rows; ++i) {
    // an inequality slack still holding +1 (no sign flip) starts basic
    if (row_slack_[i] >= 0 && T_[i][row_slack_[i]] == 1)
      basis_[i] = row_slack_[i];
    else
      basis_[i] = art_start + n_art++;
  }
  if (n_art > 0) {
    for (int i = 0; i < rows; ++i) {
      Rat b = T_[i][cols_];
      T_[i].resize(cols_ + n_art + 1);
      T_[i][cols_] = 0;
      T_[i][cols_ + n_art] = b;
      if (basis_[i] >= art_start) T_[i][basis_[i]] = 1;
    }
    int total = cols_ + n_art;
    // minimize the artificial sum: maximize -(sum of artificials)
    std::vector<Rat> red(total);
    Rat value = 0;
    for (int j = 0; j < total; ++j) {
      Rat c = (j >= art_start) ? Rat(-1) : Rat(0);
      red[j] = c;
    }
    for (int i = 0; i < rows; ++i) {
      if (basis_[i] < art_start) continue;
      for (int j = 0; j < total; ++j) red[j] += T_[i][j];
      value -= T_[i][total];
    }
    int save_cols = cols_;
    cols_ = total;
    iterate(red, value, art_start);  // artificials never (re)enter
    cols_ = save_cols;
    if (value != 0) {
      infeasible_ = true;
      return;
    }
    // drive leftover artificials out of the (degenerate) basis
    for (int i = 0; i < rows; ++i) {
      if (basis_[i] < art_start) continue;
      int enter = -1;
      for (int j = 0; j < art_start; ++j)
        if (T_[i][j] != 0) {
          enter = j;
          break;
        }
      if (enter >= 0) {
        std::vector<Rat> dummy(total);
        Rat dv = 0;
        int tot_save = cols_;
        cols_ = total;
        pivot(i, enter, dummy, dv);
        cols_ = tot_save;
      } else {
        basis_[i] = -1;  // redundant row
      }
    }
    std::vector<std::vector<Rat>> keep_rows;
    std::vector<int> keep_basis;
    for (int i = 0; i < rows; ++i) {
      if (basis_[i] < 0) continue;
      auto& row = T_[i];
      row.erase(row.begin() + art_start, row.begin() + total);
      keep_rows.push_back(std::move(row));
      keep_basis.push_back(basis_[i]);
    }
    T_ = std::move(keep_rows);
    basis_ = std::move(keep_basis);
  }
}

bool LpEngine::iterate(std::vector<Rat>& red, Rat& value, int col_limit) {
  const int rows = static_cast<int>(T_.size());
  for (;;) {
    int enter = -1;
    for (int j = 0; j < col_limit; ++j)
      if (red[j] > 0) {
        enter = j;
        break;
      }
    if (enter < 0) return true;  // optimal
    int leave = -1;
    Rat best;
    for (int i = 0; i < rows; ++i) {
      if (T_[i][enter] <= 0) continue;
      Rat ratio = T_[i][cols_] / T_[i][enter];
      if (leave < 0 || ratio < best ||
          (ratio == best && basis_[i] < basis_[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) return false;  // unbounded
    pivot(leave, enter, red, value);
  }
}

void LpEngine::pivot(int row, int col, std::vector<Rat>& red, Rat& value) {
  auto& prow = T_[row];
  Rat p = prow[col];
  if (p != 1)
    for (Rat& x : prow) x /= p;
  const int width = static_cast<int>(prow.size());
  for (auto& orow : T_) {
    if (&orow == &prow) continue;
    Rat f = orow[col];
    if (f == 0) continue;
    for (int j = 0; j < width; ++j)
      if (prow[j] != 0) orow[j] -= f * prow[j];
  }
  Rat f = red[col];
  if (f != 0) {
    for (int j = 0; j < static_cast<int>(red.size()); ++j)
      if (prow[j] != 0) red[j] -= f * prow[j];
    value += f * prow[cols_];
  }
  basis_[row] = col;
}

bool LpEngine::feasible() {
  run_phase1();
  return !infeasible_;
}

LpResult LpEngine::optimize(const std::map<std::string, Rat>& objective,
                            bool maximize) {
  run_phase1();
  LpResult res;
  if (infeasible_) {
    res.status = LpStatus::Infeasible;
    return res;
  }
  std::unordered_map<std::string, int> idx;
  for (size_t i = 0; i < vars_.size(); ++i) idx[vars_[i]] = static_cast<int>(i);
  std::vector<Rat> cost(cols_);
  for (const auto& [v, c] : objective) {
    auto it = idx.find(v);
    if (it == idx.end())
      throw std::invalid_argument("objective references unknown variable " + v);
    for (int j = 0; j < struct_cols_; ++j)
      if (col_var_[j] == it->second)
        cost[j] += (maximize ? c : -c) * col_sign_[j];
  }
  // price out the current basis
  std::vector<Rat> red = cost;
  Rat value = 0;
  const int rows = static_cast<int>(T_.size());
  for (int i = 0; i < rows; ++i) {
    Rat cb = cost[basis_[i]];
    if (cb == 0) continue;
    value += cb * T_[i][cols_];
    for (int j = 0; j < cols_; ++j)
      if (T_[i][j] != 0) red[j] -= cb * T_[i][j];
  }
  if (!iterate(red, value, cols_)) {
    res.status = LpStatus::Unbounded;
    return res;
  }
  res.status = LpStatus::Optimal;
  res.value = maximize ? value : -value;
  std::vector<Rat> colval(cols_);
  for (int i = 0; i < rows; ++i) colval[basis_[i]] = T_[i][cols_];
  for (size_t v = 0; v < vars_.size(); ++v) res.point[vars_[v]] = 0;
  for (int j = 0; j < struct_cols_; ++j)
    if (colval[j] != 0)
      res.point[vars_[col_var_[j]]] += Rat(col_sign_[j]) * colval[j];
  return res;
}

LpResult lp_optimize(const HPolytope& poly,
                     const std::map<std::string, Rat>& objective,
                     bool maximize) {
  LpEngine engine(poly);
  return engine.optimize(objective, maximize);
}

bool lp_feasible(const HPolytope& poly) {
  LpEngine engine(poly);
  return engine.feasible();
}

}  // namespace runpoly
