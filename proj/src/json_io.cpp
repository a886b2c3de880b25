#include "dirichlet_rkhs/json_io.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "dirichlet_rkhs/errors.h"

namespace dirichlet_rkhs {

namespace {

bool is_scalar(const Json& v) { return !v.is_array() && !v.is_object(); }

void emit(const Json& v, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  if (v.is_object()) {
    if (v.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (!first) out += ",\n";
      first = false;
      out += inner + Json(it.key()).dump() + ": ";
      emit(it.value(), indent + 1, out);
    }
    out += "\n" + pad + "}";
  } else if (v.is_array()) {
    bool flat = true;
    for (const auto& e : v) flat = flat && (is_scalar(e) || (e.is_array() && std::all_of(e.begin(), e.end(), is_scalar)));
    if (v.empty()) {
      out += "[]";
    } else if (flat && v.size() <= 8) {
      out += "[";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        emit(v[i], indent + 1, out);
      }
      out += "]";
    } else {
      out += "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",\n";
        out += inner;
        emit(v[i], indent + 1, out);
      }
      out += "\n" + pad + "]";
    }
  } else if (v.is_number_float()) {
    out += format_number(v.get<double>());
  } else {
    out += v.dump();
  }
}

}  // namespace

std::string format_number(double value) {
  if (!std::isfinite(value)) return "null";
  if (value == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string dump_json(const Json& value) {
  std::string out;
  emit(value, 0, out);
  out += "\n";
  return out;
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& value) {
  if (value.is_number()) return {value.get<double>(), 0.0};
  if (!value.is_array() || value.size() != 2 || !value[0].is_number() || !value[1].is_number()) {
    throw DomainError("expected a complex number as [re, im]");
  }
  return {value[0].get<double>(), value[1].get<double>()};
}

Complex parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  try {
    std::size_t used = 0;
    if (comma == std::string::npos) {
      const double re = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {re, 0.0};
    }
    const std::string re_text = text.substr(0, comma);
    const std::string im_text = text.substr(comma + 1);
    const double re = std::stod(re_text, &used);
    if (used != re_text.size()) throw std::invalid_argument(text);
    const double im = std::stod(im_text, &used);
    if (used != im_text.size()) throw std::invalid_argument(text);
    return {re, im};
  } catch (const std::logic_error&) {
    throw DomainError("cannot parse complex number '" + text + "', expected re,im");
  }
}

Json points_to_json(const PointSequence& sequence) {
  Json out = Json::array();
  for (const auto& p : sequence) out.push_back(Json::array({p.sigma(), p.t()}));
  return out;
}

PointSequence points_from_json(const Json& value) {
  if (!value.is_array()) throw DomainError("point file must hold a JSON array of [sigma, t] pairs");
  std::vector<HalfPlanePoint> points;
  for (const auto& e : value) {
    const Complex z = complex_from_json(e);
    points.emplace_back(z.real(), z.imag());
  }
  return PointSequence(std::move(points));
}

Json complex_vector_to_json(const ComplexVector& values) {
  Json out = Json::array();
  for (const auto& z : values) out.push_back(complex_to_json(z));
  return out;
}

ComplexVector complex_vector_from_json(const Json& value) {
  if (!value.is_array()) throw DomainError("expected a JSON array of [re, im] pairs");
  ComplexVector out;
  for (const auto& e : value) out.push_back(complex_from_json(e));
  return out;
}

Json space_to_json(const SpaceId& space) {
  Json out;
  out["tag"] = space.tag();
  if (space.alpha()) out["alpha"] = *space.alpha();
  return out;
}

Json report_to_json(const SequenceReport& report) {
  Json out;
  out["separation"] = report.separation;
  out["carleson"] = report.carleson;
  out["blaschke_sum"] = report.blaschke_sum;
  Json boas = Json::object();
  for (const auto& b : report.boas) boas[b.space] = b.boas;
  out["boas"] = boas;
  out["verdict_h2"] = report.verdict_h2;
  return out;
}

Json equivalence_to_json(const EquivalenceReport& report) {
  Json out;
  out["dirichlet_space"] = space_to_json(report.dirichlet_space);
  out["half_plane_space"] = space_to_json(report.half_plane_space);
  out["boas_dirichlet"] = report.m_dirichlet;
  out["boas_half_plane"] = report.m_half_plane;
  out["ratio"] = report.ratio;
  out["separation"] = report.separation;
  out["carleson"] = report.carleson;
  out["blaschke_sum"] = report.blaschke_sum;
  return out;
}

Json interpolant_to_json(const Interpolant& f) {
  Json out;
  out["space"] = space_to_json(f.space());
  out["representation"] =
      f.kind() == InterpolantKind::KernelCombination ? "kernel_combination" : "blaschke_lagrange";
  out["nodes"] = points_to_json(f.nodes());
  out["targets"] = complex_vector_to_json(f.targets());
  out["coefficients"] = complex_vector_to_json(f.coefficients());
  if (f.blaschke()) out["primes"] = f.blaschke()->primes();
  Json residuals;
  residuals["max_node_residual"] = f.max_node_residual();
  residuals["node_residuals"] = f.node_residuals();
  out["residuals"] = residuals;
  out["norm"] = f.norm() ? Json(*f.norm()) : Json(nullptr);
  out["weighted_target_norm"] = f.weighted_target_norm();
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("malformed JSON in '" + path + "': " + e.what());
  }
}

}  // namespace dirichlet_rkhs
