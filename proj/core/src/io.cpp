#include "ncrat/io.hpp"

#include <json.hpp>

#include "ncrat/error.hpp"

namespace ncrat::io {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(e.what());
  }
}

template <class T> T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw FormatError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw FormatError(std::string("field '") + key + "': " + e.what());
  }
}

const json& array_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_array())
    throw FormatError(std::string("field '") + key + "' must be an array");
  return j.at(key);
}

std::string word_text(const IndetWord& w) { return w.empty() ? "" : indet_word_to_string(w); }

json entries_json(const TruncatedSeries& p) {
  json entries = json::array();
  for (const auto& [w, c] : p.terms())
    entries.push_back(json::array({word_text(w), c.to_string()}));
  return entries;
}

TruncatedSeries entries_from_json(const json& entries, const SpecPtr& spec, unsigned mu,
                                  std::size_t order) {
  if (!entries.is_array())
    throw FormatError("series entries must be an array");
  TruncatedSeries p(spec, mu, order);
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      throw FormatError("series entry must be [word, element]");
    const auto w = parse_indet_word(e[0].get<std::string>(), mu);
    if (w.size() > order)
      throw FormatError("entry word longer than N");
    p.add_term(w, parse_element(e[1].get<std::string>(), spec));
  }
  return p;
}

json ring_matrix_json(const RingMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(m(i, j).to_string());
    rows.push_back(row);
  }
  return rows;
}

RingMatrix ring_matrix_from_json(const json& rows, const SpecPtr& spec) {
  if (!rows.is_array())
    throw FormatError("matrix must be an array of rows");
  std::vector<std::vector<RingElement>> values;
  for (const auto& row : rows) {
    if (!row.is_array())
      throw FormatError("matrix row must be an array");
    std::vector<RingElement> r;
    for (const auto& e : row) {
      if (!e.is_string())
        throw FormatError("matrix entry must be an element string");
      r.push_back(parse_element(e.get<std::string>(), spec));
    }
    values.push_back(std::move(r));
  }
  return RingMatrix::from_rows(spec, values);
}

json series_matrix_json(const SeriesMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(entries_json(m(i, j)));
    rows.push_back(row);
  }
  return {{"spec", m.spec()->name()}, {"mu", m.mu()}, {"N", m.order()}, {"matrix", rows}};
}

json vector_json(const RingMatrix& v, bool row) {
  json out = json::array();
  const std::size_t n = row ? v.cols() : v.rows();
  for (std::size_t k = 0; k < n; ++k)
    out.push_back((row ? v(0, k) : v(k, 0)).to_string());
  return out;
}

json ops_json(const std::vector<ElementaryOp>& ops) {
  json out = json::array();
  for (const auto& op : ops)
    out.push_back({{"kind", op.kind == ElementaryOp::Kind::RowAdd ? "row-add" : "col-add"},
                   {"i", op.i + 1},
                   {"j", op.j + 1},
                   {"multiplier", entries_json(op.multiplier)}});
  return out;
}

} // namespace

std::string write_series(const TruncatedSeries& p) {
  return json{{"spec", p.spec()->name()}, {"mu", p.mu()}, {"N", p.order()}, {"entries", entries_json(p)}}
      .dump(2);
}

TruncatedSeries read_series(std::string_view text) {
  const json j = parse_json(text);
  const auto spec = RingSpec::parse(field<std::string>(j, "spec"));
  return entries_from_json(array_field(j, "entries"), spec, field<unsigned>(j, "mu"),
                           field<std::size_t>(j, "N"));
}

std::string write_series_matrix(const SeriesMatrix& m) { return series_matrix_json(m).dump(2); }

SeriesMatrix read_series_matrix(std::string_view text) {
  const json j = parse_json(text);
  const auto spec = RingSpec::parse(field<std::string>(j, "spec"));
  const auto mu = field<unsigned>(j, "mu");
  const auto order = field<std::size_t>(j, "N");
  const json& rows = array_field(j, "matrix");
  std::vector<std::vector<TruncatedSeries>> values;
  for (const auto& row : rows) {
    if (!row.is_array())
      throw FormatError("matrix row must be an array");
    std::vector<TruncatedSeries> r;
    for (const auto& e : row)
      r.push_back(entries_from_json(e, spec, mu, order));
    values.push_back(std::move(r));
  }
  return SeriesMatrix::from_rows(values);
}

std::string write_ring_matrix(const RingMatrix& m) {
  return json{{"spec", m.spec()->name()}, {"matrix", ring_matrix_json(m)}}.dump(2);
}

RingMatrix read_ring_matrix(std::string_view text) {
  const json j = parse_json(text);
  const auto spec = RingSpec::parse(field<std::string>(j, "spec"));
  return ring_matrix_from_json(array_field(j, "matrix"), spec);
}

std::string write_machine(const LinearMachine& m) {
  json s = json::array();
  for (const auto& si : m.s())
    s.push_back(ring_matrix_json(si));
  return json{{"spec", m.spec()->name()}, {"mu", m.mu()}, {"n", m.dim()},
              {"f", vector_json(m.f(), true)}, {"s", s}, {"g", vector_json(m.g(), false)}}
      .dump(2);
}

LinearMachine read_machine(std::string_view text) {
  const json j = parse_json(text);
  const auto spec = RingSpec::parse(field<std::string>(j, "spec"));
  const auto mu = field<unsigned>(j, "mu");
  const auto n = field<std::size_t>(j, "n");
  const json& f_json = array_field(j, "f");
  const json& g_json = array_field(j, "g");
  const json& s_json = array_field(j, "s");
  if (f_json.size() != n || g_json.size() != n)
    throw FormatError("f and g must have n entries");
  if (s_json.size() != mu)
    throw FormatError("s must hold one matrix per indeterminate");
  RingMatrix f(spec, 1, n), g(spec, n, 1);
  for (std::size_t k = 0; k < n; ++k) {
    if (!f_json[k].is_string() || !g_json[k].is_string())
      throw FormatError("f/g entries must be element strings");
    f.set(0, k, parse_element(f_json[k].get<std::string>(), spec));
    g.set(k, 0, parse_element(g_json[k].get<std::string>(), spec));
  }
  std::vector<RingMatrix> s;
  for (const auto& si : s_json) {
    auto m = n == 0 ? RingMatrix(spec, 0, 0) : ring_matrix_from_json(si, spec);
    if (m.rows() != n || m.cols() != n)
      throw FormatError("transition matrices must be n x n");
    s.push_back(std::move(m));
  }
  return LinearMachine(std::move(f), std::move(s), std::move(g));
}

std::string write_report(const ChainReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  json stage = r.stage ? json(*r.stage) : json("inf");
  return json{{"stage", stage}, {"order", r.order}, {"pass", r.pass()}, {"chi_gap", r.chi_gap},
              {"checks", checks}}
      .dump(2);
}

std::string write_necklaces(const std::vector<NecklaceElement>& coefficients) {
  json out = json::array();
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    out.push_back({{"degree", i + 1}, {"value", coefficients[i].to_string()}});
  return out.dump(2);
}

std::string write_reduction(const GaussianReduction& r) {
  json diagonal = json::array();
  for (const auto& d : r.diagonal)
    diagonal.push_back(entries_json(d));
  return json{{"unit_part", ring_matrix_json(r.unit_part)},
              {"diagonal", diagonal},
              {"ops", ops_json(r.log.ops)},
              {"verified", r.log.verify()}}
      .dump(2);
}

std::string write_witt(const WittSplit& w) {
  json diagonal = json::array();
  for (const auto& d : w.reduction.diagonal)
    diagonal.push_back(entries_json(d));
  return json{{"unit_part", ring_matrix_json(w.unit_part)},
              {"witt_part", entries_json(w.witt_part)},
              {"diagonal", diagonal},
              {"verified", w.reduction.log.verify()}}
      .dump(2);
}

} // namespace ncrat::io
