#include "pshcalc/io.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>

#include "pshcalc/errors.hpp"

namespace pshcalc::io {

namespace {

const Json& member(const Json& j, const char* name) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) throw ParseError(std::string("missing member \"") + name + "\"");
  return *it;
}

int int_member(const Json& j, const char* name) {
  const Json& v = member(j, name);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ParseError(std::string("member \"") + name + "\" must be a nonnegative integer");
  }
  return v.get<int>();
}

BigInt integer_from_json(const Json& v) {
  if (v.is_string()) return parse_decimal(v.get<std::string>());
  if (v.is_number_integer()) {
    return v.is_number_unsigned() ? BigInt(std::to_string(v.get<unsigned long long>()))
                                  : BigInt(std::to_string(v.get<long long>()));
  }
  throw ParseError("expected an integer or a decimal string, got " + v.dump());
}

std::string csv_quote(const std::string& text) { return "\"" + text + "\""; }

}  // namespace

Json to_json(const Partition& alpha) {
  Json out = Json::array();
  for (int part : alpha.parts()) out.push_back(part);
  return out;
}

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("partition must be a JSON array of integers");
  std::vector<int> parts;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ParseError("partition parts must be integers");
    parts.push_back(v.get<int>());
  }
  try {
    return Partition(std::move(parts));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Json to_json(const PshVector& v) {
  Json coeffs = Json::object();
  for (const auto& [alpha, value] : v.coeffs()) {
    if (value.fits_slong_p()) {
      coeffs[format_partition(alpha)] = value.get_si();
    } else {
      coeffs[format_partition(alpha)] = to_decimal(value);
    }
  }
  return Json{{"n", v.n()}, {"basis", std::string(to_string(v.basis()))}, {"coeffs", coeffs}};
}

PshVector psh_vector_from_json(const Json& j, ParseMode mode) {
  const int n = int_member(j, "n");
  const Json& basis_text = member(j, "basis");
  Basis basis;
  if (basis_text == "X") {
    basis = Basis::X;
  } else if (basis_text == "Y") {
    basis = Basis::Y;
  } else {
    throw ParseError("basis must be \"X\" or \"Y\"");
  }
  PshVector out(n, basis);
  const Json& coeffs = member(j, "coeffs");
  if (!coeffs.is_object()) throw ParseError("\"coeffs\" must be an object");
  for (const auto& [key, value] : coeffs.items()) {
    out.add_to(parse_partition(key, mode), integer_from_json(value));
  }
  return out;
}

Json to_json(const CoefficientVector& v) {
  Json values = Json::object();
  for (const auto& [alpha, value] : v.values()) values[format_partition(alpha)] = to_decimal(value);
  return Json{{"n", v.n()}, {"side", std::string(to_string(v.side()))}, {"values", values}};
}

CoefficientVector coefficient_vector_from_json(const Json& j, ParseMode mode) {
  const Json& side_text = member(j, "side");
  Side side;
  if (side_text == "c") {
    side = Side::c;
  } else if (side_text == "d") {
    side = Side::d;
  } else {
    throw ParseError("side must be \"c\" or \"d\"");
  }
  const Json& values = member(j, "values");
  if (!values.is_object()) throw ParseError("\"values\" must be an object");

  std::vector<std::pair<Partition, BigInt>> entries;
  for (const auto& [key, value] : values.items()) {
    entries.emplace_back(parse_partition(key, mode), integer_from_json(value));
  }
  int n = 0;
  if (j.contains("n")) {
    n = int_member(j, "n");
  } else if (!entries.empty()) {
    n = entries.front().first.weight();
  } else {
    throw ParseError("cannot infer n for a vector with no entries; give \"n\"");
  }
  CoefficientVector out(n, side);
  for (auto& [alpha, value] : entries) {
    if (alpha.weight() != n) {
      throw WeightMismatch("key \"" + format_partition(alpha) + "\" has weight " +
                           std::to_string(alpha.weight()) + " but n = " + std::to_string(n));
    }
    if (sgn(out.at(alpha)) != 0) {
      throw ParseError("duplicate key " + display_partition(alpha));
    }
    out.set(alpha, std::move(value));
  }
  return out;
}

Json to_json(const TransitionMatrix& m) {
  Json order = Json::array();
  for (const auto& alpha : m.order()) order.push_back(to_json(alpha));
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(to_decimal(m(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"n", m.n()},
              {"order", std::move(order)},
              {"kind", std::string(to_string(m.kind()))},
              {"entries", std::move(rows)}};
}

TransitionMatrix matrix_from_json(const Json& j) {
  const int n = int_member(j, "n");
  const Json& kind_text = member(j, "kind");
  if (!kind_text.is_string()) throw ParseError("\"kind\" must be a string");
  const MatrixKind kind = parse_matrix_kind(kind_text.get<std::string>());
  auto index = make_index(n, std::max(n, kPartitionMaxN));

  const Json& order = member(j, "order");
  if (!order.is_array() || order.size() != index->size()) {
    throw ParseError("\"order\" must list all " + std::to_string(index->size()) + " partitions");
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (!(partition_from_json(order[i]) == index->at(i))) {
      throw ParseError("\"order\" is not the canonical order at position " + std::to_string(i));
    }
  }
  const Json& rows = member(j, "entries");
  const std::size_t p = index->size();
  if (!rows.is_array() || rows.size() != p) throw ParseError("\"entries\" has the wrong shape");
  std::vector<BigInt> entries;
  entries.reserve(p * p);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != p) throw ParseError("\"entries\" has the wrong shape");
    for (const auto& v : row) entries.push_back(integer_from_json(v));
  }
  return TransitionMatrix(std::move(index), kind, std::move(entries));
}

void write_csv(std::ostream& out, const TransitionMatrix& m) {
  out << "\"\"";
  for (const auto& alpha : m.order()) out << ',' << csv_quote(format_partition(alpha));
  out << '\n';
  for (std::size_t i = 0; i < m.size(); ++i) {
    out << csv_quote(format_partition(m.order().at(i)));
    for (std::size_t j = 0; j < m.size(); ++j) out << ',' << to_decimal(m(i, j));
    out << '\n';
  }
}

void write_table(std::ostream& out, const TransitionMatrix& m) {
  const std::size_t p = m.size();
  std::vector<std::string> labels;
  std::size_t label_width = 0;
  for (const auto& alpha : m.order()) {
    labels.push_back(display_partition(alpha));
    label_width = std::max(label_width, labels.back().size());
  }
  std::vector<std::size_t> widths(p);
  for (std::size_t j = 0; j < p; ++j) {
    widths[j] = labels[j].size();
    for (std::size_t i = 0; i < p; ++i) {
      widths[j] = std::max(widths[j], to_decimal(m(i, j)).size());
    }
  }
  out << to_string(m.kind()) << '(' << m.n() << ")\n";
  out << std::string(label_width, ' ');
  for (std::size_t j = 0; j < p; ++j) {
    out << "  " << std::setw(static_cast<int>(widths[j])) << labels[j];
  }
  out << '\n';
  for (std::size_t i = 0; i < p; ++i) {
    out << std::left << std::setw(static_cast<int>(label_width)) << labels[i] << std::right;
    for (std::size_t j = 0; j < p; ++j) {
      out << "  " << std::setw(static_cast<int>(widths[j])) << to_decimal(m(i, j));
    }
    out << '\n';
  }
}

std::string dump(const Json& j, int indent) { return j.dump(indent) + "\n"; }

}  // namespace pshcalc::io
