#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mdl/expr.hpp"
#include "mdl/harness.hpp"
#include "mdl/json_io.hpp"
#include "mdl/polyspace.hpp"
#include "mdl/tasaka.hpp"

namespace {

using namespace mdl;

struct CommonOpts {
  std::string format = "table";
  std::string cache_dir;
  bool no_cache = false;
  std::string mode = "auto";
  std::uint64_t seed = 0;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_mode = false) {
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  cmd->add_option("--cache-dir", opts.cache_dir,
                  "cache directory (default $MDL_CACHE_DIR or ./.mdl-cache)");
  cmd->add_flag("--no-cache", opts.no_cache, "disable the result cache");
  if (with_mode) {
    cmd->add_option("--mode", opts.mode, "rank computation mode")
        ->check(CLI::IsMember({"exact", "modular", "auto"}));
    cmd->add_option("--seed", opts.seed,
                    "seed for the modular prime stream (fixed default for "
                    "reproducibility)");
  }
}

harness::CacheStore make_cache(const CommonOpts& opts) {
  if (opts.no_cache) return harness::CacheStore();
  if (!opts.cache_dir.empty()) return harness::CacheStore(opts.cache_dir);
  if (const char* env = std::getenv("MDL_CACHE_DIR"))
    return harness::CacheStore(env);
  return harness::CacheStore(".mdl-cache");
}

void print_matrix_table(const exactlin::MatQ& m, std::ostream& out) {
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) {
      if (j) out << "\t";
      out << rat_str(m(i, j));
    }
    out << "\n";
  }
}

void print_matrix_csv(const tasaka::TasakaMatrix& m, std::ostream& out) {
  out << "m\\n";
  for (const auto& t : m.index.tuples) out << ",\"" << t.str() << "\"";
  out << "\n";
  for (std::size_t i = 0; i < m.mat.rows; ++i) {
    out << "\"" << m.index.tuples[i].str() << "\"";
    for (std::size_t j = 0; j < m.mat.cols; ++j)
      out << "," << rat_str(m.mat(i, j));
    out << "\n";
  }
}

void print_depth_poly(const liealg::DepthPoly& p, const std::string& format,
                      std::ostream& out) {
  if (format == "json") {
    out << depth_poly_to_json(p).dump(1) << "\n";
    return;
  }
  if (p.is_zero()) {
    out << "0\n";
    return;
  }
  for (const auto& [e, c] : p.terms) {
    out << rat_str(c) << "\t";
    bool constant = true;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!constant) out << "*";
      out << "y" << k;
      if (e[k] > 1) out << "^" << e[k];
      constant = false;
    }
    if (constant) out << "1";
    out << "\n";
  }
}

int report_exit(const harness::VerificationReport& report, const CommonOpts& opts,
                const std::string& json_out) {
  if (opts.format == "json")
    std::cout << report.to_json().dump(1) << "\n";
  else
    report.print(std::cout);
  if (!json_out.empty()) {
    std::ofstream out(json_out);
    if (!out) {
      std::cerr << "cannot write report to " << json_out << "\n";
      return 1;
    }
    out << report.to_json().dump(1) << "\n";
  }
  return report.has_hard_failure() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "mdl: exact computations in the depth-graded Lie algebra on two letters\n"
      "(index sets S_{N,r}, Tasaka matrices E/C, period polynomial spaces,\n"
      "Hilbert series checks). All arithmetic is exact over Q."};
  app.require_subcommand(1);

  // ---- matrix ----
  auto* matrix_cmd = app.add_subcommand(
      "matrix", "emit E^{(k)}_{N,r}, C_{N,r} or the eta-tilde block matrix");
  CommonOpts matrix_opts;
  int m_weight = 0, m_depth = 0, m_level = 0;
  std::string m_kind = "E";
  matrix_cmd->add_option("--kind", m_kind, "matrix family")
      ->check(CLI::IsMember({"E", "C", "EtaTilde"}));
  matrix_cmd->add_option("-N,--weight", m_weight, "weight N")->required();
  matrix_cmd->add_option("-r,--depth", m_depth, "depth r")->required();
  matrix_cmd->add_option("--level", m_level, "level k for kind E (default r)");
  add_common(matrix_cmd, matrix_opts);

  // ---- rank ----
  auto* rank_cmd = app.add_subcommand(
      "rank", "rank of C_{N,r} (single cell or table), exact or certified modular");
  CommonOpts rank_opts;
  int k_weight = 0, k_depth = 0, k_weight_max = 0, k_depth_max = 0;
  rank_cmd->add_option("-N,--weight", k_weight, "weight N");
  rank_cmd->add_option("-r,--depth", k_depth, "depth r");
  rank_cmd->add_option("--weight-max", k_weight_max, "table: largest weight");
  rank_cmd->add_option("--depth-max", k_depth_max, "table: largest depth");
  add_common(rank_cmd, rank_opts, /*with_mode=*/true);

  // ---- basis ----
  auto* basis_cmd = app.add_subcommand(
      "basis", "bases: period polynomials, W_{N,r}, or matrix kernels");
  basis_cmd->require_subcommand(1);
  CommonOpts basis_opts;
  int b_weight = 0, b_depth = 0;
  std::string b_of = "E";
  auto* basis_period = basis_cmd->add_subcommand(
      "period", "restricted even period polynomials of weight N");
  basis_period->add_option("-N,--weight", b_weight, "weight N")->required();
  auto* basis_w = basis_cmd->add_subcommand(
      "w", "W_{N,r}: solutions of the dihedral functional equation");
  basis_w->add_option("-N,--weight", b_weight, "weight N")->required();
  basis_w->add_option("-r,--depth", b_depth, "depth r")->required();
  auto* basis_kernel =
      basis_cmd->add_subcommand("kernel", "left kernel of E_{N,r} or C_{N,r}");
  basis_kernel->add_option("-N,--weight", b_weight, "weight N")->required();
  basis_kernel->add_option("-r,--depth", b_depth, "depth r")->required();
  basis_kernel->add_option("--of", b_of, "matrix family")
      ->check(CLI::IsMember({"E", "C"}));
  for (auto* sub : {basis_period, basis_w, basis_kernel})
    add_common(sub, basis_opts);

  // ---- hilbert ----
  auto* hilbert_cmd = app.add_subcommand(
      "hilbert", "coefficients of 1/(1 - O(x)y + S(x)y^2)");
  CommonOpts hilbert_opts;
  int h_weight = 0, h_depth = 0, h_weight_max = 0, h_depth_max = 0;
  hilbert_cmd->add_option("-N,--weight", h_weight, "weight N");
  hilbert_cmd->add_option("-r,--depth", h_depth, "depth r");
  hilbert_cmd->add_option("--weight-max", h_weight_max, "table: largest weight");
  hilbert_cmd->add_option("--depth-max", h_depth_max, "table: largest depth");
  add_common(hilbert_cmd, hilbert_opts);

  // ---- bracket ----
  auto* bracket_cmd = app.add_subcommand(
      "bracket", "evaluate sigma expressions under the Ihara bracket "
                 "(--dg: depth-graded bracket in polynomial form)");
  CommonOpts bracket_opts;
  std::string bracket_expr;
  bool bracket_dg = false;
  bracket_cmd->add_option("expr", bracket_expr,
                          "expression, e.g. \"2*{s3,s5} - {s3,{s3,s5}}\"")
      ->required();
  bracket_cmd->add_flag("--dg", bracket_dg, "use the depth-graded bracket");
  add_common(bracket_cmd, bracket_opts);

  // ---- compose ----
  auto* compose_cmd = app.add_subcommand(
      "compose", "right-nested sigma chain in polynomial form");
  CommonOpts compose_opts;
  std::string compose_tuple;
  compose_cmd->add_option("--tuple", compose_tuple, "indices, e.g. \"3,5,3\"")
      ->required();
  add_common(compose_cmd, compose_opts);

  // ---- verify ----
  auto* verify_cmd = app.add_subcommand(
      "verify", "run verification suites and report proven/conjectural status");
  verify_cmd->require_subcommand(1);
  CommonOpts verify_opts;
  int v_weight_max = 0, v_depth = 3, v_depth_max = 4;
  std::string v_json_out;
  auto* verify_tasaka_cmd = verify_cmd->add_subcommand(
      "tasaka", "isomorphism statement: inclusion, injectivity, surjectivity");
  verify_tasaka_cmd->add_option("--depth,-r", v_depth, "depth r (>= 3)");
  verify_tasaka_cmd->add_option("--weight-max", v_weight_max, "largest weight")
      ->default_val(23);
  auto* verify_brown_cmd = verify_cmd->add_subcommand(
      "brown", "rank C_{N,r} against the Hilbert series coefficients");
  auto* verify_rec_cmd = verify_cmd->add_subcommand(
      "recurrence", "three-term rank recurrence across depths");
  auto* verify_dec_cmd = verify_cmd->add_subcommand(
      "decomposition", "kernel decompositions along the partial E-products");
  auto* verify_cross_cmd = verify_cmd->add_subcommand(
      "crosscheck", "sigma-chain coefficients against the entries of C");
  auto* verify_all_cmd =
      verify_cmd->add_subcommand("all", "the full verification suite");
  for (auto* sub : {verify_brown_cmd, verify_rec_cmd, verify_dec_cmd,
                    verify_cross_cmd, verify_all_cmd}) {
    sub->add_option("--weight-max", v_weight_max, "largest weight");
    sub->add_option("--depth-max", v_depth_max, "largest depth");
  }
  v_json_out = "mdl-report.json";
  for (auto* sub : {verify_tasaka_cmd, verify_brown_cmd, verify_rec_cmd,
                    verify_dec_cmd, verify_cross_cmd, verify_all_cmd}) {
    sub->add_option("--json-out", v_json_out,
                    "JSON report file (empty string disables)")
        ->capture_default_str();
    add_common(sub, verify_opts, /*with_mode=*/true);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*matrix_cmd) {
      tasaka::TasakaMatrix m;
      if (m_kind == "E")
        m = tasaka::build_E(m_weight, m_depth, m_level ? m_level : m_depth);
      else if (m_kind == "C")
        m = tasaka::build_C(m_weight, m_depth);
      else
        m = tasaka::build_eta_tilde(m_weight, m_depth);
      if (matrix_opts.format == "json")
        std::cout << tasaka_to_json(m).dump(1) << "\n";
      else if (matrix_opts.format == "csv")
        print_matrix_csv(m, std::cout);
      else
        print_matrix_table(m.mat, std::cout);
      return 0;
    }

    if (*rank_cmd) {
      const auto cache = make_cache(rank_opts);
      const auto mode = harness::mode_parse(rank_opts.mode);
      if (k_weight_max > 0) {
        const int depth_max = k_depth_max > 0 ? k_depth_max : 4;
        const auto table =
            harness::rank_table(k_weight_max, depth_max, mode, cache, rank_opts.seed);
        const auto target = harness::hilbert_target(k_weight_max, depth_max);
        if (rank_opts.format == "csv") std::cout << "N,r,size,rank,method,status\n";
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& [cell, entry] : table.entries) {
          const Rational coeff = target.get(cell.first, cell.second);
          const std::string status = Rational(entry.rank) == coeff ? "equal"
                                     : Rational(entry.rank) > coeff ? "greater"
                                                                    : "smaller";
          const std::string method =
              entry.cert.method == exactlin::RankCertificate::Method::exact
                  ? "exact"
                  : "modular";
          if (rank_opts.format == "json")
            rows.push_back({{"N", cell.first},
                            {"r", cell.second},
                            {"size", entry.size},
                            {"rank", entry.rank},
                            {"method", method},
                            {"status", status}});
          else if (rank_opts.format == "csv")
            std::cout << cell.first << "," << cell.second << "," << entry.size << ","
                      << entry.rank << "," << method << "," << status << "\n";
          else
            std::cout << "N=" << cell.first << " r=" << cell.second
                      << " size=" << entry.size << " rank=" << entry.rank << " ("
                      << method << ", " << status << ")\n";
        }
        if (rank_opts.format == "json") std::cout << rows.dump(1) << "\n";
        return 0;
      }
      if (k_weight <= 0 || k_depth <= 0)
        throw CLI::ValidationError("rank", "need -N and -r, or --weight-max");
      const auto entry =
          harness::rank_cell(k_weight, k_depth, mode, cache, rank_opts.seed);
      if (rank_opts.format == "json") {
        nlohmann::json out{{"N", k_weight},
                           {"r", k_depth},
                           {"size", entry.size},
                           {"rank", entry.rank},
                           {"method",
                            entry.cert.method ==
                                    exactlin::RankCertificate::Method::exact
                                ? "exact"
                                : "modular"},
                           {"primes", entry.cert.primes}};
        std::cout << out.dump(1) << "\n";
      } else {
        std::cout << entry.rank << "\n";
      }
      return 0;
    }

    if (*basis_cmd) {
      if (*basis_period) {
        const auto space = tasaka::period_basis(b_weight);
        if (basis_opts.format == "json")
          std::cout << period_space_to_json(space).dump(1) << "\n";
        else {
          std::cout << "dim " << space.dimension() << "\n";
          for (const auto& p : space.basis)
            std::cout << xpoly_to_json(p).dump() << "\n";
        }
      } else if (*basis_w) {
        const auto space = tasaka::w_basis(b_weight, b_depth);
        if (basis_opts.format == "json")
          std::cout << w_space_to_json(space).dump(1) << "\n";
        else {
          std::cout << "dim " << space.dimension() << "\n";
          for (const auto& p : space.basis) {
            const auto v = tasaka::pi_coords(p, b_weight, b_depth);
            std::cout << coeff_vector_to_json(v).dump() << "\n";
          }
        }
      } else {
        const auto m = b_of == "E" ? tasaka::build_E(b_weight, b_depth, b_depth)
                                   : tasaka::build_C(b_weight, b_depth);
        const auto kernel = exactlin::left_kernel_basis(m.mat);
        const auto out = subspace_to_json(kernel, m.index);
        if (basis_opts.format == "json")
          std::cout << out.dump(1) << "\n";
        else {
          std::cout << "dim " << kernel.dimension() << "\n";
          for (const auto& vec : out) std::cout << vec.dump() << "\n";
        }
      }
      return 0;
    }

    if (*hilbert_cmd) {
      if (h_weight_max > 0) {
        const int depth_max = h_depth_max > 0 ? h_depth_max : 4;
        const auto target = harness::hilbert_target(h_weight_max, depth_max);
        if (hilbert_opts.format == "csv") std::cout << "N,r,coefficient\n";
        nlohmann::json rows = nlohmann::json::object();
        for (int r = 1; r <= depth_max; ++r)
          for (int N = 1; N <= h_weight_max; ++N) {
            const Rational c = target.get(N, r);
            if (c == 0) continue;
            if (hilbert_opts.format == "json")
              rows[std::to_string(N) + "," + std::to_string(r)] = rat_str(c);
            else if (hilbert_opts.format == "csv")
              std::cout << N << "," << r << "," << rat_str(c) << "\n";
            else
              std::cout << "N=" << N << " r=" << r << "  " << rat_str(c) << "\n";
          }
        if (hilbert_opts.format == "json") std::cout << rows.dump(1) << "\n";
        return 0;
      }
      if (h_weight <= 0 || h_depth <= 0)
        throw CLI::ValidationError("hilbert", "need -N and -r, or --weight-max");
      const auto target = harness::hilbert_target(h_weight, h_depth);
      std::cout << rat_str(target.get(h_weight, h_depth)) << "\n";
      return 0;
    }

    if (*bracket_cmd) {
      const auto expr = cli::parse_sigma_expr(bracket_expr);
      if (bracket_dg) {
        print_depth_poly(cli::eval_depth_graded(expr), bracket_opts.format,
                         std::cout);
      } else {
        const auto poly = cli::eval_ihara(expr);
        if (bracket_opts.format == "json")
          std::cout << ncpoly_to_json(poly).dump(1) << "\n";
        else if (poly.is_zero())
          std::cout << "0\n";
        else
          for (const auto& [w, c] : poly.terms)
            std::cout << rat_str(c) << "\t" << w.str() << "\n";
      }
      return 0;
    }

    if (*compose_cmd) {
      const auto tuple = liealg::parse_index_tuple(compose_tuple);
      print_depth_poly(liealg::compose_sigma_chain(tuple), compose_opts.format,
                       std::cout);
      return 0;
    }

    if (*verify_cmd) {
      const auto cache = make_cache(verify_opts);
      const auto mode = harness::mode_parse(verify_opts.mode);
      harness::VerificationReport report;
      report.mode = verify_opts.mode;
      if (*verify_tasaka_cmd) {
        report.n_max = v_weight_max;
        report.r_max = v_depth;
        for (int N = 3 * v_depth; N <= v_weight_max; ++N) {
          if ((N - v_depth) % 2 != 0) continue;
          report.checks.push_back(harness::eta_identity_check(N, v_depth, cache));
          auto items = harness::tasaka_check(N, v_depth, cache);
          report.checks.insert(report.checks.end(), items.begin(), items.end());
        }
      } else if (*verify_all_cmd) {
        if (v_weight_max == 0) v_weight_max = 25;
        report = harness::full_report(v_weight_max, v_depth_max, mode, cache,
                                      verify_opts.seed);
      } else {
        if (v_weight_max == 0)
          v_weight_max = (*verify_dec_cmd || *verify_cross_cmd) ? 21 : 25;
        report.n_max = v_weight_max;
        report.r_max = v_depth_max;
        if (*verify_brown_cmd) {
          const auto table = harness::rank_table(v_weight_max, v_depth_max, mode,
                                                 cache, verify_opts.seed);
          report = harness::exactness_report(v_weight_max, v_depth_max, table);
          report.mode = verify_opts.mode;
        } else if (*verify_rec_cmd) {
          const auto table = harness::rank_table(v_weight_max, v_depth_max, mode,
                                                 cache, verify_opts.seed);
          for (int r = 2; r <= v_depth_max; ++r)
            for (int N = 1; N <= v_weight_max; ++N) {
              if ((N - r) % 2 != 0) continue;
              if (table.size_at(N, r) == 0 &&
                  harness::recurrence_value(N, r, table) == 0)
                continue;
              report.checks.push_back(harness::recurrence_check(N, r, table));
            }
        } else if (*verify_dec_cmd) {
          for (int r = 3; r <= v_depth_max; ++r)
            for (int N = 3 * r; N <= v_weight_max; ++N) {
              if ((N - r) % 2 != 0) continue;
              auto items = harness::decomposition_check(N, r, cache);
              report.checks.insert(report.checks.end(), items.begin(), items.end());
            }
        } else if (*verify_cross_cmd) {
          for (int r = 2; r <= v_depth_max; ++r)
            for (int N = 3 * r; N <= v_weight_max; ++N) {
              if ((N - r) % 2 != 0) continue;
              if (liealg::enumerate_index_set(N, r).size() == 0) continue;
              report.checks.push_back(harness::crosscheck_cell(N, r, cache));
            }
        }
      }
      return report_exit(report, verify_opts, v_json_out);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
