#include "tclprop/hamiltonian_file.hpp"

#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "tclprop/operator_core.hpp"
#include "tclprop/projection.hpp"

namespace tclprop {

namespace {

struct HamiltonianTerm {
  Complex coefficient;
  double harmonic = 0.0; // w in exp(i w t); 0 means constant
  ComplexMatrix matrix;
};

[[noreturn]] void fail(int line, const std::string& message) {
  throw std::runtime_error("hamiltonian file, line " + std::to_string(line) + ": " + message);
}

double parse_real(const std::string& token, int line) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(token, &pos);
  } catch (const std::exception&) {
    fail(line, "expected a number, got '" + token + "'");
  }
  if (pos != token.size()) fail(line, "trailing characters in number '" + token + "'");
  if (!std::isfinite(v)) fail(line, "non-finite value '" + token + "'");
  return v;
}

Complex parse_entry(const std::string& token, int line) {
  const std::size_t comma = token.find(',');
  if (comma == std::string::npos) fail(line, "matrix entry must be 're,im', got '" + token + "'");
  return {parse_real(token.substr(0, comma), line), parse_real(token.substr(comma + 1), line)};
}

std::vector<std::string> split(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

} // namespace

TimeDependentHamiltonian load_custom_hamiltonian(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open hamiltonian file: " + path);

  Eigen::Index dim = 0;
  std::vector<HamiltonianTerm> terms;
  int pending_rows = 0; // matrix rows still expected for the current term

  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::vector<std::string> tokens = split(raw);
    if (tokens.empty()) continue;

    if (pending_rows > 0) {
      if (static_cast<Eigen::Index>(tokens.size()) != dim) {
        fail(line_no, "expected " + std::to_string(dim) + " entries in matrix row, got " +
                          std::to_string(tokens.size()));
      }
      HamiltonianTerm& term = terms.back();
      const Eigen::Index row = dim - pending_rows;
      for (Eigen::Index col = 0; col < dim; ++col) {
        term.matrix(row, col) = parse_entry(tokens[col], line_no);
      }
      --pending_rows;
      continue;
    }

    if (tokens[0] == "dim") {
      if (dim != 0) fail(line_no, "duplicate 'dim' directive");
      if (tokens.size() != 2) fail(line_no, "usage: dim <n>");
      const double v = parse_real(tokens[1], line_no);
      if (v < 1 || v != std::floor(v)) fail(line_no, "dimension must be a positive integer");
      dim = static_cast<Eigen::Index>(v);
    } else if (tokens[0] == "term") {
      if (dim == 0) fail(line_no, "'dim' must precede the first term");
      if (tokens.size() != 3 && !(tokens.size() == 5 && tokens[3] == "harmonic")) {
        fail(line_no, "usage: term <re> <im> [harmonic <w>]");
      }
      HamiltonianTerm term;
      term.coefficient = {parse_real(tokens[1], line_no), parse_real(tokens[2], line_no)};
      if (tokens.size() == 5) term.harmonic = parse_real(tokens[4], line_no);
      term.matrix = ComplexMatrix::Zero(dim, dim);
      terms.push_back(std::move(term));
      pending_rows = static_cast<int>(dim);
    } else {
      fail(line_no, "unknown directive '" + tokens[0] + "'");
    }
  }

  if (dim == 0) throw std::runtime_error("hamiltonian file '" + path + "': no 'dim' directive");
  if (pending_rows > 0) {
    throw std::runtime_error("hamiltonian file '" + path + "': truncated matrix block (" +
                             std::to_string(pending_rows) + " rows missing)");
  }

  bool zero_diag = true;
  for (const HamiltonianTerm& term : terms) {
    if (project_diag(term.matrix).norm() > 1e-13 * std::max(1.0, term.matrix.norm())) {
      zero_diag = false;
    }
  }

  auto shared = std::make_shared<std::vector<HamiltonianTerm>>(std::move(terms));
  const Eigen::Index d = dim;
  return {d,
          [shared, d](double t) {
            ComplexMatrix h = ComplexMatrix::Zero(d, d);
            for (const HamiltonianTerm& term : *shared) {
              h += term.coefficient * std::exp(kI * term.harmonic * t) * term.matrix;
            }
            return h;
          },
          zero_diag};
}

} // namespace tclprop
