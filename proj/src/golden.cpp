#include "qcat/golden.hpp"

#include <sstream>
#include <stdexcept>

#include "qcat/bijections.hpp"
#include "qcat/families.hpp"
#include "qcat/objects.hpp"
#include "qcat/statistics.hpp"
#include "qcat/tilings.hpp"
#include "qcat/words.hpp"

namespace qcat {

namespace {

// Word with a dot after every descent position except the final one, the
// layout used by the source tables (e.g. 0001.0111 for a descent at 4).
std::string dotted(const Word01& w, DescentConvention conv) {
  const std::set<int> des = descent_set_with(w, conv);
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    s += w[i] ? '1' : '0';
    const int pos = static_cast<int>(i) + 1;
    if (pos != static_cast<int>(w.size()) && des.count(pos)) s += '.';
  }
  return s;
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

// Fifteen 2-Stirling words with their inversion and major statistics.
std::string table_1() {
  static const char* kRows[] = {
      "112233", "211233", "221133", "113223", "311223",
      "321123", "322113", "113322", "311322", "331122",
      "332112", "332211", "223113", "223311", "322311",
  };
  std::ostringstream out;
  for (const char* row : kRows) {
    const MultiWord w = parse_multiword(row);
    out << format_multiword(w) << " " << stirling_INV(w, 2) << " "
        << stirling_MAJ(w, 2) << "\n";
  }
  return out.str();
}

// The five non-crossing partitions of {1,2,3} with their maj statistic.
std::string table_2() {
  static const char* kRows[] = {"1/2/3", "12/3", "13/2", "1/23", "123"};
  std::ostringstream out;
  for (const char* row : kRows) {
    const NonCrossingPartition p = parse_nc(row);
    out << format_nc(p) << " " << nc_maj(p) << "\n";
  }
  return out.str();
}

// All fourteen Dyck words of length 8 with maj, their symmetric-path images,
// and the symmetric maj of the image half-word.
std::string table_4() {
  std::ostringstream out;
  for (const Word01& p : enumerate_r_dyck(4, 1)) {
    const SymmetricPath s = psi(p);
    out << dotted(p, DescentConvention::kStandard) << " " << maj(p) << " "
        << dotted(s.half, DescentConvention::kSymmetric) << " " << sym_maj(s)
        << "\n";
  }
  return out.str();
}

std::string c_poly() {
  std::ostringstream out;
  for (int n = 2; n <= 4; ++n) {
    out << "C_" << n << " = " << catalan_poly(n).text() << "\n";
  }
  return out.str();
}

std::string e2_poly() {
  std::ostringstream out;
  for (int n = 1; n <= 3; ++n) {
    out << "E_" << n << "^(2) = " << e_general_poly(n, 2).text() << "\n";
  }
  return out.str();
}

std::string kappa_ex() {
  const MultiWord v = parse_multiword("42112334");
  std::ostringstream out;
  out << "word " << format_multiword(v) << "\n";
  out << "alpha " << parenthesized(kappa_alpha(v, 2)) << "\n";
  out << "path " << format_word(kappa(v, 2)) << "\n";
  return out.str();
}

std::string phi_ex() {
  const MultiWord v = parse_multiword("2255431134");
  PhiTrace trace;
  const MultiWord image = phi(v, 2, &trace);
  std::ostringstream out;
  out << "input " << format_multiword(v) << "\n";
  out << "MAJ " << stirling_MAJ(v, 2) << "\n";
  out << "maj chain " << chain_text(trace.maj_chain) << "\n";
  out << "inv chain " << chain_text(trace.inv_chain) << "\n";
  out << "output " << format_multiword(image) << "\n";
  out << "INV " << stirling_INV(image, 2) << "\n";
  return out.str();
}

std::string nc312_ex() {
  const NonCrossingPartition p = parse_nc("158/24/3/67");
  const NcChain chain = nc_to_sigma(p);
  const MultiWord sigma_inv = inverse_permutation(chain.sigma);
  std::ostringstream out;
  out << "input " << format_nc(p) << "\n";
  out << "minima " << joined(chain.minima, ",") << "\n";
  out << "maxima " << joined(chain.maxima, ",") << "\n";
  out << "peaks " << joined(chain.peaks, ",") << "\n";
  out << "valleys " << joined(chain.valleys, ",") << "\n";
  out << "dyck " << dotted(chain.dyck, DescentConvention::kStandard) << "\n";
  out << "code " << parenthesized(chain.code) << "\n";
  out << "mu " << format_multiword(chain.mu) << "\n";
  out << "sigma " << format_multiword(chain.sigma) << "\n";
  out << "maj(sigma) " << maj(chain.sigma) << "\n";
  out << "maj(sigma^-1) " << maj(sigma_inv) << "\n";
  out << "total " << (maj(chain.sigma) + maj(sigma_inv)) << "\n";
  out << "nc_maj " << nc_maj(p) << "\n";
  return out.str();
}

std::string rho_ex() {
  const MultiWord pi = parse_multiword("631245");
  std::ostringstream out;
  out << "input " << format_multiword(pi) << "\n";
  out << "Des " << parenthesized(rho_descents(pi)) << "\n";
  out << "iDes " << parenthesized(rho_inverse_descents(pi)) << "\n";
  out << "path " << dotted(rho(pi), DescentConvention::kStandard) << "\n";
  return out.str();
}

std::string tiling_ex() {
  const MultiWord pi = parse_multiword("24135");
  const DyckTiling t = build_tiling(pi);
  std::ostringstream out;
  out << "permutation " << format_multiword(pi) << "\n";
  for (const Tile& tile : t.tiles) {
    if (tile.size == 0) continue;
    out << "zigzag label " << tile.label << " size " << tile.size
        << " leftmost (" << tile.leftmost.x << "," << tile.leftmost.y
        << ") maj " << tile_maj(tile) << "\n";
  }
  out << "maj " << tiling_maj(t) << "\n";
  out << "wtprime " << tiling_wtprime(t) << "\n";
  return out.str();
}

// All fourteen tilings for n = 4: permutation, its Dyck word, and the total
// tile maj, in the source figure's row order.
std::string tiling_table() {
  static const char* kRows[] = {
      "1234", "4123", "1423", "1243", "3124", "4312", "4132",
      "1324", "1432", "2134", "4213", "2143", "3214", "4321",
  };
  std::ostringstream out;
  for (const char* row : kRows) {
    const MultiWord pi = parse_multiword(row);
    out << format_multiword(pi) << " "
        << dotted(rho(pi), DescentConvention::kStandard) << " "
        << tiling_maj(build_tiling(pi)) << "\n";
  }
  return out.str();
}

}  // namespace

std::vector<std::string> golden_ids() {
  return {"table-1",  "table-2", "table-4",  "c-poly",    "e2-poly",
          "kappa-ex", "phi-ex",  "nc312-ex", "rho-ex",    "tiling-ex",
          "tiling-table"};
}

bool is_golden_id(const std::string& id) {
  for (const std::string& known : golden_ids()) {
    if (id == known) return true;
  }
  return false;
}

std::string golden_text(const std::string& id) {
  if (id == "table-1") return table_1();
  if (id == "table-2") return table_2();
  if (id == "table-4") return table_4();
  if (id == "c-poly") return c_poly();
  if (id == "e2-poly") return e2_poly();
  if (id == "kappa-ex") return kappa_ex();
  if (id == "phi-ex") return phi_ex();
  if (id == "nc312-ex") return nc312_ex();
  if (id == "rho-ex") return rho_ex();
  if (id == "tiling-ex") return tiling_ex();
  if (id == "tiling-table") return tiling_table();
  throw std::invalid_argument("unknown table id: " + id);
}

}  // namespace qcat
