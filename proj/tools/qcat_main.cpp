// Command-line interface for the q-Catalan enumeration library.
//
// Subcommands: enumerate, stat, dist, map, poly, series, verify, render,
// golden.  Exit codes: 0 = success / all checks pass, 1 = a verification
// failed (or an internal invariant broke), 2 = usage or parse error.  All
// data goes to stdout; warnings and progress go to stderr.

#include <algorithm>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qcat/bijections.hpp"
#include "qcat/families.hpp"
#include "qcat/golden.hpp"
#include "qcat/objects.hpp"
#include "qcat/poly.hpp"
#include "qcat/series.hpp"
#include "qcat/statistics.hpp"
#include "qcat/tilings.hpp"
#include "qcat/verify.hpp"
#include "qcat/words.hpp"

namespace {

using nlohmann::ordered_json;
using namespace qcat;

// ---------------------------------------------------------------------------
// shared option state
// ---------------------------------------------------------------------------

struct Options {
  int n = -1;
  int r = 1;
  int k = -1;
  int n_max = 0;
  int r_max = 0;
  int order = -1;
  int max_override = 0;
  std::string input;
  std::string filter;
  bool inverse = false;
  bool trace = false;
  bool json = false;
  bool parallel = false;
};

// Default guards against accidentally huge sweeps; --max N raises the cap.
int default_cap(int r) { return r <= 1 ? 12 : 8; }

void enforce_cap(const std::string& what, int value, int cap,
                 int max_override) {
  if (value < 0) throw ParseError(what + " must be non-negative");
  if (max_override > 0) {
    if (value > max_override) {
      throw ParseError(what + "=" + std::to_string(value) +
                       " exceeds the requested --max " +
                       std::to_string(max_override));
    }
    if (value > cap) {
      std::cerr << "warning: " << what << "=" << value
                << " exceeds the default size cap " << cap
                << "; this may take a long time\n";
    }
    return;
  }
  if (value > cap) {
    throw ParseError(what + "=" + std::to_string(value) +
                     " exceeds the size cap " + std::to_string(cap) +
                     " (use --max to override)");
  }
}

void require_flag(bool present, const std::string& msg) {
  if (!present) throw ParseError(msg);
}

std::string joined(const std::vector<int>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

std::string parenthesized(const std::vector<int>& v) {
  return "(" + joined(v, ",") + ")";
}

std::string chain_text(const std::vector<MultiWord>& chain) {
  std::string s;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i) s += " -> ";
    s += format_multiword(chain[i]);
  }
  return s;
}

bool keeps_filter(const MultiWord& w, const std::string& filter) {
  if (filter == "231") return !contains_231(w);
  if (filter == "312") return !contains_312(w);
  if (filter == "132") return !contains_132(w);
  throw ParseError("unknown --filter value '" + filter +
                   "' (expected 231, 312, or 132)");
}

LaurentPoly qp(long e) {
  Exps exps = kUnitExps;
  exps[static_cast<int>(Var::q)] = static_cast<int>(e);
  return LaurentPoly::term(exps, 1);
}

// ---------------------------------------------------------------------------
// enumerate
// ---------------------------------------------------------------------------

int cmd_enumerate(const std::string& family, const Options& opt) {
  require_flag(opt.n >= 0, "enumerate requires --n");
  const bool r_family = family == "dyck" || family == "stirling";
  const int r = r_family ? opt.r : 1;
  if (r_family && r < 1) throw ParseError("--r must be at least 1");
  enforce_cap("n", opt.n, default_cap(r), opt.max_override);
  if (!opt.filter.empty() && family != "stirling" && family != "perm") {
    throw ParseError("--filter is not supported for family '" + family + "'");
  }

  std::vector<std::string> values;
  if (family == "dyck") {
    for (const Word01& w : enumerate_r_dyck(opt.n, r)) {
      values.push_back(format_word(w));
    }
  } else if (family == "stirling") {
    for (const MultiWord& w : enumerate_r_stirling(opt.n, r)) {
      if (!opt.filter.empty() && !keeps_filter(w, opt.filter)) continue;
      values.push_back(format_multiword(w));
    }
  } else if (family == "perm") {
    if (opt.filter.empty()) {
      for (const MultiWord& w : enumerate_permutations(opt.n)) {
        values.push_back(format_multiword(w));
      }
    } else {
      for (const MultiWord& w : enumerate_avoiding(opt.n, opt.filter)) {
        values.push_back(format_multiword(w));
      }
    }
  } else if (family == "nc") {
    for (const NonCrossingPartition& p : enumerate_nc(opt.n)) {
      values.push_back(format_nc(p));
    }
  } else if (family == "sym") {
    for (const SymmetricPath& p : enumerate_symmetric(opt.n)) {
      values.push_back(format_word(p.half));
    }
  } else {
    throw ParseError("unknown family '" + family +
                     "' (expected dyck, stirling, perm, nc, or sym)");
  }

  if (opt.json) {
    ordered_json arr = ordered_json::array();
    for (const std::string& v : values) {
      arr.push_back({{"family", family}, {"r", r}, {"n", opt.n}, {"value", v}});
    }
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const std::string& v : values) std::cout << v << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// stat
// ---------------------------------------------------------------------------

int cmd_stat(const std::string& family, const std::string& stat,
             const Options& opt) {
  require_flag(!opt.input.empty(), "stat requires --input");
  std::vector<std::pair<std::string, std::string>> fields;

  if (family == "dyck") {
    const Word01 w = parse_word(opt.input);
    if (opt.r < 1) throw ParseError("--r must be at least 1");
    if (!is_r_dyck(w, opt.r)) {
      throw ParseError("input is not a valid path word for r=" +
                       std::to_string(opt.r));
    }
    if (stat == "maj") {
      fields.emplace_back("maj", std::to_string(maj(w)));
    } else if (stat == "iinv") {
      fields.emplace_back("iinv", std::to_string(r_dyck_iinv(w)));
    } else if (stat == "inv") {
      fields.emplace_back("inv", std::to_string(r_dyck_inv(w, opt.r)));
    } else if (stat == "des") {
      fields.emplace_back("des", std::to_string(descent_set(w).size()));
    } else if (stat == "alpha" || stat == "beta" || stat == "desab") {
      const auto [alpha, beta] = alpha_beta(w);
      fields.emplace_back("des", std::to_string(descent_set(w).size()));
      fields.emplace_back("alpha", std::to_string(alpha));
      fields.emplace_back("beta", std::to_string(beta));
    } else {
      throw ParseError("unknown dyck statistic '" + stat +
                       "' (expected maj, iinv, inv, des, or desab)");
    }
  } else if (family == "stirling") {
    const MultiWord w = parse_multiword(opt.input);
    if (opt.r < 1) throw ParseError("--r must be at least 1");
    if (!is_stirling(w, opt.r)) {
      throw ParseError("input is not a valid word for r=" +
                       std::to_string(opt.r));
    }
    if (stat == "INV") {
      fields.emplace_back("INV", std::to_string(stirling_INV(w, opt.r)));
    } else if (stat == "MAJ") {
      fields.emplace_back("MAJ", std::to_string(stirling_MAJ(w, opt.r)));
    } else if (stat == "inv") {
      fields.emplace_back("inv", std::to_string(inv(w)));
    } else if (stat == "maj") {
      fields.emplace_back("maj", std::to_string(maj(w)));
    } else {
      throw ParseError("unknown stirling statistic '" + stat +
                       "' (expected INV, MAJ, inv, or maj)");
    }
  } else if (family == "perm") {
    const MultiWord w = parse_multiword(opt.input);
    if (!is_permutation(w)) throw ParseError("input is not a permutation");
    if (stat == "inv") {
      fields.emplace_back("inv", std::to_string(inv(w)));
    } else if (stat == "maj") {
      fields.emplace_back("maj", std::to_string(maj(w)));
    } else if (stat == "imaj") {
      fields.emplace_back("imaj", std::to_string(maj(inverse_permutation(w))));
    } else {
      throw ParseError("unknown perm statistic '" + stat +
                       "' (expected inv, maj, or imaj)");
    }
  } else if (family == "nc") {
    const NonCrossingPartition p = parse_nc(opt.input);
    if (stat == "maj") {
      fields.emplace_back("maj", std::to_string(nc_maj(p)));
    } else if (stat == "wtprime") {
      fields.emplace_back("wtprime", std::to_string(nc_wtprime(p)));
    } else if (stat == "rank") {
      fields.emplace_back("rank", std::to_string(p.rank()));
    } else {
      throw ParseError("unknown nc statistic '" + stat +
                       "' (expected maj, wtprime, or rank)");
    }
  } else if (family == "sym") {
    const SymmetricPath p = make_symmetric(parse_word(opt.input));
    if (stat == "maj") {
      fields.emplace_back("maj", std::to_string(sym_maj(p)));
    } else if (stat == "inv") {
      const SymInv si = sym_inv(p);
      fields.emplace_back("inv1", std::to_string(si.inv1));
      fields.emplace_back("inv2", std::to_string(si.inv2));
      fields.emplace_back("inv", std::to_string(si.total));
    } else {
      throw ParseError("unknown sym statistic '" + stat +
                       "' (expected maj or inv)");
    }
  } else {
    throw ParseError("unknown family '" + family +
                     "' (expected dyck, stirling, perm, nc, or sym)");
  }

  if (opt.json) {
    ordered_json out{{"family", family}, {"stat", stat}, {"input", opt.input}};
    for (const auto& [key, value] : fields) out[key] = std::stol(value);
    std::cout << out.dump(2) << "\n";
  } else if (fields.size() == 1) {
    std::cout << fields.front().second << "\n";
  } else {
    for (const auto& [key, value] : fields) {
      std::cout << key << " " << value << "\n";
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// dist
// ---------------------------------------------------------------------------

int cmd_dist(const std::string& family, const std::string& stat,
             const Options& opt) {
  require_flag(opt.n >= 0, "dist requires --n");
  const bool r_family = family == "dyck" || family == "stirling";
  const int r = r_family ? opt.r : 1;
  if (r_family && r < 1) throw ParseError("--r must be at least 1");
  enforce_cap("n", opt.n, default_cap(r), opt.max_override);
  if (!opt.filter.empty() && family != "stirling" && family != "perm") {
    throw ParseError("--filter is not supported for family '" + family + "'");
  }

  LaurentPoly dist;
  if (family == "dyck") {
    for (const Word01& w : enumerate_r_dyck(opt.n, r)) {
      if (stat == "maj") {
        dist += qp(maj(w));
      } else if (stat == "iinv") {
        dist += qp(r_dyck_iinv(w));
      } else if (stat == "inv") {
        dist += qp(r_dyck_inv(w, r));
      } else if (stat == "desab") {
        const auto [alpha, beta] = alpha_beta(w);
        Exps e = kUnitExps;
        e[static_cast<int>(Var::x)] = static_cast<int>(descent_set(w).size());
        e[static_cast<int>(Var::a)] = static_cast<int>(alpha);
        e[static_cast<int>(Var::b)] = static_cast<int>(beta);
        dist += LaurentPoly::term(e, 1);
      } else {
        throw ParseError("unknown dyck statistic '" + stat +
                         "' (expected maj, iinv, inv, or desab)");
      }
    }
  } else if (family == "stirling") {
    for (const MultiWord& w : enumerate_r_stirling(opt.n, r)) {
      if (!opt.filter.empty() && !keeps_filter(w, opt.filter)) continue;
      if (stat == "INV") {
        dist += qp(stirling_INV(w, r));
      } else if (stat == "MAJ") {
        dist += qp(stirling_MAJ(w, r));
      } else if (stat == "inv") {
        dist += qp(inv(w));
      } else if (stat == "maj") {
        dist += qp(maj(w));
      } else {
        throw ParseError("unknown stirling statistic '" + stat +
                         "' (expected INV, MAJ, inv, or maj)");
      }
    }
  } else if (family == "perm") {
    std::vector<MultiWord> perms = opt.filter.empty()
                                       ? enumerate_permutations(opt.n)
                                       : enumerate_avoiding(opt.n, opt.filter);
    for (const MultiWord& w : perms) {
      if (stat == "inv") {
        dist += qp(inv(w));
      } else if (stat == "maj") {
        dist += qp(maj(w));
      } else if (stat == "imaj") {
        dist += qp(maj(inverse_permutation(w)));
      } else if (stat == "qt") {
        Exps e = kUnitExps;
        e[static_cast<int>(Var::q)] = static_cast<int>(maj(w));
        e[static_cast<int>(Var::t)] =
            static_cast<int>(maj(inverse_permutation(w)));
        dist += LaurentPoly::term(e, 1);
      } else {
        throw ParseError("unknown perm statistic '" + stat +
                         "' (expected inv, maj, imaj, or qt)");
      }
    }
  } else if (family == "nc") {
    for (const NonCrossingPartition& p : enumerate_nc(opt.n)) {
      if (stat == "maj") {
        dist += qp(nc_maj(p));
      } else if (stat == "wtprime") {
        dist += qp(nc_wtprime(p));
      } else {
        throw ParseError("unknown nc statistic '" + stat +
                         "' (expected maj or wtprime)");
      }
    }
  } else if (family == "sym") {
    for (const SymmetricPath& p : enumerate_symmetric(opt.n)) {
      if (stat == "maj") {
        dist += qp(sym_maj(p));
      } else if (stat == "inv") {
        dist += qp(sym_inv(p).total);
      } else {
        throw ParseError("unknown sym statistic '" + stat +
                         "' (expected maj or inv)");
      }
    }
  } else {
    throw ParseError("unknown family '" + family +
                     "' (expected dyck, stirling, perm, nc, or sym)");
  }

  if (opt.json) {
    ordered_json out{{"family", family},
                     {"stat", stat},
                     {"r", r},
                     {"n", opt.n},
                     {"value", dist.text()}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << dist.text() << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// map
// ---------------------------------------------------------------------------

int cmd_map(const std::string& name, const Options& opt) {
  require_flag(!opt.input.empty(), "map requires --input");
  std::vector<std::string> trace_lines;
  std::string output;

  if (name == "kappa") {
    if (opt.r < 1) throw ParseError("--r must be at least 1");
    if (opt.inverse) {
      const Word01 path = parse_word(opt.input);
      output = format_multiword(kappa_inv(path, opt.r));
    } else {
      const MultiWord v = parse_multiword(opt.input);
      if (opt.trace) {
        trace_lines.push_back("alpha " + parenthesized(kappa_alpha(v, opt.r)));
      }
      output = format_word(kappa(v, opt.r));
    }
  } else if (name == "phi") {
    if (opt.r < 1) throw ParseError("--r must be at least 1");
    const MultiWord v = parse_multiword(opt.input);
    PhiTrace trace;
    PhiTrace* tp = opt.trace ? &trace : nullptr;
    const MultiWord image = opt.inverse ? phi_inv(v, opt.r, tp)
                                        : phi(v, opt.r, tp);
    if (opt.trace) {
      trace_lines.push_back("maj chain " + chain_text(trace.maj_chain));
      trace_lines.push_back("inv chain " + chain_text(trace.inv_chain));
      trace_lines.push_back("gaps " + joined(trace.gaps, ","));
    }
    output = format_multiword(image);
  } else if (name == "rho") {
    if (opt.inverse) {
      const Word01 path = parse_word(opt.input);
      const MultiWord pi = rho_inv(path);
      if (opt.trace) {
        trace_lines.push_back("Des " + parenthesized(rho_descents(pi)));
        trace_lines.push_back("iDes " +
                              parenthesized(rho_inverse_descents(pi)));
      }
      output = format_multiword(pi);
    } else {
      const MultiWord pi = parse_multiword(opt.input);
      if (opt.trace) {
        trace_lines.push_back("Des " + parenthesized(rho_descents(pi)));
        trace_lines.push_back("iDes " +
                              parenthesized(rho_inverse_descents(pi)));
      }
      output = format_word(rho(pi));
    }
  } else if (name == "nc312") {
    NonCrossingPartition p;
    if (opt.inverse) {
      const MultiWord sigma = parse_multiword(opt.input);
      p = sigma_to_nc(sigma);
      output = format_nc(p);
    } else {
      p = parse_nc(opt.input);
      output = format_multiword(nc_to_sigma(p).sigma);
    }
    if (opt.trace) {
      const NcChain chain = nc_to_sigma(p);
      trace_lines.push_back("minima " + joined(chain.minima, ","));
      trace_lines.push_back("maxima " + joined(chain.maxima, ","));
      trace_lines.push_back("peaks " + joined(chain.peaks, ","));
      trace_lines.push_back("valleys " + joined(chain.valleys, ","));
      trace_lines.push_back("dyck " + format_word(chain.dyck));
      trace_lines.push_back("code " + parenthesized(chain.code));
      trace_lines.push_back("mu " + format_multiword(chain.mu));
    }
  } else if (name == "psi") {
    if (opt.inverse) {
      const SymmetricPath p = make_symmetric(parse_word(opt.input));
      if (opt.trace) {
        const ArchDecomposition arches = arch_decompose(p.half);
        trace_lines.push_back("half-arches " +
                              parenthesized(arches.half_arches));
      }
      output = format_word(psi_inv(p));
    } else {
      const Word01 w = parse_word(opt.input);
      const SymmetricPath p = psi(w);
      if (opt.trace) {
        const ArchDecomposition arches = arch_decompose(p.half);
        trace_lines.push_back("half-arches " +
                              parenthesized(arches.half_arches));
      }
      output = format_word(p.half);
    }
  } else {
    throw ParseError("unknown map '" + name +
                     "' (expected kappa, phi, rho, nc312, or psi)");
  }

  if (opt.json) {
    ordered_json out{{"map", name},
                     {"inverse", opt.inverse},
                     {"input", opt.input},
                     {"output", output}};
    if (opt.trace) out["trace"] = trace_lines;
    std::cout << out.dump(2) << "\n";
  } else {
    for (const std::string& line : trace_lines) std::cout << line << "\n";
    std::cout << output << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// poly
// ---------------------------------------------------------------------------

int cmd_poly(const std::string& name, const Options& opt) {
  require_flag(opt.n >= 0, "poly requires --n");
  // families whose --r multiplies object size (others use r as an index)
  const bool r_sized = name == "fuss" || name == "er" || name == "egen";
  enforce_cap("n", opt.n, default_cap(r_sized ? opt.r : 1), opt.max_override);

  LaurentPoly value;
  bool has_r = true;
  bool has_k = false;
  if (name == "catalan") {
    value = catalan_poly(opt.n);
    has_r = false;
  } else if (name == "e") {
    value = e_poly(opt.n);
    has_r = false;
  } else if (name == "fuss") {
    if (opt.r < 1) throw ParseError("--r must be at least 1");
    value = fuss_catalan_poly(opt.n, opt.r);
  } else if (name == "er") {
    if (opt.r < 1) throw ParseError("--r must be at least 1");
    value = e_r_poly(opt.n, opt.r);
  } else if (name == "egen") {
    if (opt.r < 1) throw ParseError("--r must be at least 1");
    value = e_general_poly(opt.n, opt.r);
  } else if (name == "narayana") {
    value = narayana_poly(opt.n, opt.r);
  } else if (name == "n2") {
    value = n2_rec(opt.n, opt.r);
  } else if (name == "n3") {
    value = n3_rec(opt.n, opt.r);
  } else if (name == "n3k" || name == "n3plus" || name == "n3minus") {
    require_flag(opt.k >= 0, "poly " + name + " requires --k");
    has_k = true;
    if (name == "n3k") {
      value = n3k_closed(opt.n, opt.r, opt.k);
    } else if (name == "n3plus") {
      value = n3_plus(opt.n, opt.r, opt.k);
    } else {
      value = n3_minus(opt.n, opt.r, opt.k);
    }
  } else if (name == "aqt") {
    value = aqt_poly(opt.n);
    has_r = false;
  } else {
    throw ParseError(
        "unknown family '" + name +
        "' (expected catalan, fuss, e, er, egen, narayana, n2, n3, n3k, "
        "n3plus, n3minus, or aqt)");
  }

  if (opt.json) {
    ordered_json out{{"family", name}, {"n", opt.n}};
    if (has_r) out["r"] = opt.r;
    if (has_k) out["k"] = opt.k;
    out["value"] = value.text();
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << value.text() << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// series
// ---------------------------------------------------------------------------

int cmd_series(const std::string& name, const Options& opt) {
  require_flag(opt.order >= 1, "series requires --order (at least 1)");
  enforce_cap("order", opt.order, 12, opt.max_override);

  TruncSeries s = TruncSeries::zero(opt.order);
  bool has_r = true;
  if (name == "defCn") {
    s = series_catalan_def(opt.order);
    has_r = false;
  } else if (name == "Cnrinsum") {
    if (opt.r < 1) throw ParseError("--r must be at least 1");
    s = series_fuss_def(opt.r, opt.order);
  } else if (name == "Einqq") {
    if (opt.r < 1) throw ParseError("--r must be at least 1");
    s = series_e_def(opt.r, opt.order);
  } else if (name == "Einprod") {
    if (opt.r < 1) throw ParseError("--r must be at least 1");
    s = series_e_general_def(opt.r, opt.order);
  } else {
    throw ParseError("unknown series '" + name +
                     "' (expected defCn, Cnrinsum, Einqq, or Einprod)");
  }

  if (opt.json) {
    ordered_json out{{"series", name}, {"order", opt.order}};
    if (has_r) out["r"] = opt.r;
    out["value"] = s.text();
    out["equals_z"] = (s == TruncSeries::z(opt.order));
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << s.text() << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

int cmd_verify(const std::string& id, const Options& opt) {
  std::vector<std::string> ids;
  if (id == "all") {
    ids = default_verification_ids();
  } else if (is_verification_id(id)) {
    ids.push_back(id);
  } else {
    throw ParseError("unknown verification id '" + id + "'");
  }

  if (opt.n_max > 0) {
    // checks that sweep an r parameter use the smaller cap
    int cap = 12;
    bool r_sweeping = false;
    for (const std::string& one : ids) {
      if (one == "count-rdyck" || one == "count-stirling" ||
          one == "eq-iInvCrn" || one == "eq-majEr" || one == "thm-E" ||
          one == "thm-INVMAJ" || one == "prop-231Crn" ||
          one == "bij-kappa" || one == "bij-phi") {
        r_sweeping = true;
      }
    }
    if (r_sweeping && (opt.r_max == 0 || opt.r_max >= 2)) cap = 8;
    enforce_cap("n-max", opt.n_max, cap, opt.max_override);
  }

  const std::vector<VerificationReport> reports =
      run_verifications(ids, opt.n_max, opt.r_max, opt.parallel);

  bool any_fail = false;
  if (opt.json) {
    ordered_json arr = ordered_json::array();
    for (const VerificationReport& rep : reports) {
      arr.push_back({{"id", rep.id},
                     {"pass", rep.pass},
                     {"expected_fail", rep.expected_fail},
                     {"bounds", rep.bounds},
                     {"detail", rep.detail}});
      if (!rep.pass) any_fail = true;
    }
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const VerificationReport& rep : reports) {
      if (rep.pass) {
        std::cout << "PASS " << rep.id << " " << rep.bounds << "\n";
      } else {
        std::cout << "FAIL " << rep.id << " " << rep.bounds << ": "
                  << rep.detail << "\n";
        any_fail = true;
      }
    }
  }
  return any_fail ? 1 : 0;
}

// ---------------------------------------------------------------------------
// render / golden
// ---------------------------------------------------------------------------

int cmd_render(const std::string& what, const Options& opt) {
  if (what != "tiling") {
    throw ParseError("unknown render target '" + what + "' (expected tiling)");
  }
  require_flag(!opt.input.empty(), "render tiling requires --input");
  const MultiWord pi = parse_multiword(opt.input);
  std::cout << render_tiling(build_tiling(pi));
  return 0;
}

int cmd_golden(const std::string& id) {
  std::cout << golden_text(id);
  return 0;
}

// ---------------------------------------------------------------------------
// main
// ---------------------------------------------------------------------------

void add_common_flags(CLI::App* sub, Options& opt) {
  sub->add_option("--n", opt.n, "object size");
  sub->add_option("--r", opt.r, "order parameter (default 1)");
  sub->add_option("--k", opt.k, "secondary index");
  sub->add_option("--n-max", opt.n_max, "sweep bound override");
  sub->add_option("--r-max", opt.r_max, "sweep bound override");
  sub->add_option("--order", opt.order, "series truncation order");
  sub->add_option("--input", opt.input, "object in canonical text form");
  sub->add_option("--filter", opt.filter, "pattern filter (231, 312, 132)");
  sub->add_option("--max", opt.max_override,
                  "raise the size cap (unsafe; expect long runtimes)");
  sub->add_flag("--inverse", opt.inverse, "apply the inverse map");
  sub->add_flag("--trace", opt.trace, "print intermediate data");
  sub->add_flag("--json", opt.json, "JSON output");
  sub->add_flag("--parallel", opt.parallel, "run checks concurrently");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact enumeration of Catalan-family objects and their "
               "q-statistics"};
  app.require_subcommand(1);

  Options opt;
  std::string family, stat, name, id;

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "list a family (dyck, stirling, perm, nc, sym)");
  enumerate->add_option("family", family)->required();
  add_common_flags(enumerate, opt);

  CLI::App* stat_cmd =
      app.add_subcommand("stat", "one statistic of one object");
  stat_cmd->add_option("family", family)->required();
  stat_cmd->add_option("stat", stat)->required();
  add_common_flags(stat_cmd, opt);

  CLI::App* dist = app.add_subcommand(
      "dist", "generating polynomial of a statistic over a family");
  dist->add_option("family", family)->required();
  dist->add_option("stat", stat)->required();
  add_common_flags(dist, opt);

  CLI::App* map_cmd = app.add_subcommand(
      "map", "apply a bijection (kappa, phi, rho, nc312, psi)");
  map_cmd->add_option("name", name)->required();
  add_common_flags(map_cmd, opt);

  CLI::App* poly = app.add_subcommand("poly", "evaluate a polynomial family");
  poly->add_option("name", name)->required();
  add_common_flags(poly, opt);

  CLI::App* series =
      app.add_subcommand("series", "evaluate a defining series expansion");
  series->add_option("name", name)->required();
  add_common_flags(series, opt);

  CLI::App* verify =
      app.add_subcommand("verify", "run registered identity checks");
  verify->add_option("id", id)->required();
  add_common_flags(verify, opt);

  CLI::App* render = app.add_subcommand("render", "draw an object as text");
  render->add_option("what", name)->required();
  add_common_flags(render, opt);

  CLI::App* golden =
      app.add_subcommand("golden", "print a reference table by id");
  golden->add_option("id", id)->required();
  add_common_flags(golden, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(family, opt);
    if (stat_cmd->parsed()) return cmd_stat(family, stat, opt);
    if (dist->parsed()) return cmd_dist(family, stat, opt);
    if (map_cmd->parsed()) return cmd_map(name, opt);
    if (poly->parsed()) return cmd_poly(name, opt);
    if (series->parsed()) return cmd_series(name, opt);
    if (verify->parsed()) return cmd_verify(id, opt);
    if (render->parsed()) return cmd_render(name, opt);
    if (golden->parsed()) return cmd_golden(id);
    std::cerr << "error: no subcommand given\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
