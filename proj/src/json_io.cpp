#include <locnorm/json_io.hpp>

#include <fstream>
#include <sstream>

namespace locnorm {

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InputError&) {
    throw;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

std::string get_string(const json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key).get<std::string>();
}

template <class T>
T get_or(const json& j, const char* key, T fallback) {
  return j.contains(key) ? j.at(key).get<T>() : fallback;
}

std::vector<RootMult> roots_from_json(const json& j) {
  std::vector<RootMult> out;
  if (j.is_null()) return out;
  for (const auto& e : j) {
    if (e.is_object())
      out.push_back({complex_from_json(e.at("value")), get_or(e, "mult", 1)});
    else
      out.push_back({complex_from_json(e), 1});
  }
  return out;
}

}  // namespace

json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(source + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

json to_json(const cplx& z) {
  if (z.imag() == 0.0) return z.real();
  return json::array({z.real(), z.imag()});
}

cplx complex_from_json(const json& j) {
  return guarded("complex number", [&] {
    if (j.is_number()) return cplx(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2) return cplx(j[0].get<double>(), j[1].get<double>());
    if (j.is_object()) return cplx(get_or(j, "re", 0.0), get_or(j, "im", 0.0));
    throw InputError("complex number must be a number, [re, im] or {re, im}");
  });
}

json to_json(const ExactReal& x) {
  json j = {{"value", x.value()}};
  if (x.exact()) j["exact"] = x.exact()->str();
  return j;
}

json to_json(const LocalField& f) {
  switch (f.kind) {
    case FieldKind::real: return {{"kind", "real"}};
    case FieldKind::complex: return {{"kind", "complex"}};
    case FieldKind::nonarch: return {{"kind", "nonarch"}, {"q", f.q}, {"c_psi", f.psi_conductor}};
  }
  return {};
}

LocalField field_from_json(const json& j) {
  return guarded("field", [&] {
    std::string k = get_string(j, "kind");
    if (k == "real") return LocalField::real();
    if (k == "complex") return LocalField::complex();
    if (k == "nonarch") {
      int q = j.at("q").get<int>();
      if (q < 2) throw InputError("field: q must be at least 2");
      return LocalField::nonarch(q, get_or(j, "c_psi", 0));
    }
    throw InputError("field: unknown kind \"" + k + "\"");
  });
}

json to_json(const SquareIntegrableBlock& b) {
  if (const auto* x = std::get_if<RealDS>(&b)) return {{"type", "real_ds"}, {"k", x->k}, {"twist", x->twist}};
  if (const auto* x = std::get_if<RealChar>(&b)) return {{"type", "real_char"}, {"eps", x->eps}, {"twist", x->twist}};
  if (const auto* x = std::get_if<ComplexChar>(&b)) return {{"type", "complex_char"}, {"r", x->r}, {"twist", x->twist}};
  const auto& s = std::get<Segment>(b);
  return {{"type", "segment"},
          {"length", s.length},
          {"cusp",
           {{"degree", s.cusp.degree},
            {"twist_order", s.cusp.twist_order},
            {"conductor", s.cusp.conductor},
            {"class_id", s.cusp.class_id},
            {"self_dual", s.cusp.self_dual},
            {"twist", s.cusp.twist}}}};
}

json to_json(const Unit& u) {
  if (const auto* s = std::get_if<SpehBlock>(&u)) return {{"type", "speh"}, {"k", s->k}, {"delta", to_json(s->delta)}};
  return to_json(std::get<SquareIntegrableBlock>(u));
}

SquareIntegrableBlock block_from_json(const json& j) {
  return guarded("block", [&]() -> SquareIntegrableBlock {
    std::string t = get_string(j, "type");
    if (t == "real_ds") return RealDS{j.at("k").get<int>(), get_or(j, "twist", 0.0)};
    if (t == "real_char") return RealChar{j.at("eps").get<int>(), get_or(j, "twist", 0.0)};
    if (t == "complex_char") return ComplexChar{j.at("r").get<int>(), get_or(j, "twist", 0.0)};
    if (t == "segment") {
      const auto& c = j.at("cusp");
      SupercuspidalStandIn s;
      s.degree = get_or(c, "degree", 1);
      s.twist_order = get_or(c, "twist_order", 1);
      s.conductor = get_or(c, "conductor", 0);
      s.class_id = get_or(c, "class_id", std::string("1"));
      s.self_dual = get_or(c, "self_dual", true);
      s.twist = get_or(c, "twist", 0.0);
      return Segment{get_or(j, "length", 1), s};
    }
    throw InputError("block: unknown type \"" + t + "\"");
  });
}

Unit unit_from_json(const json& j) {
  return guarded("unit", [&]() -> Unit {
    if (get_string(j, "type") == "speh") return SpehBlock{block_from_json(j.at("delta")), j.at("k").get<int>()};
    return block_from_json(j);
  });
}

json to_json(const InducedDatum& d) {
  json blocks = json::array();
  for (const auto& b : d.blocks) blocks.push_back({{"unit", to_json(b.unit)}, {"shift", b.shift}});
  json j = {{"schema", kInducedDatumSchema}, {"field", to_json(d.field)}, {"flavor", to_string(d.flavor)}};
  if (d.mixed_k) j["mixed_k"] = true;
  j["blocks"] = blocks;
  return j;
}

InducedDatum datum_from_json(const json& j) {
  return guarded("induced datum", [&] {
    if (j.contains("schema") && j.at("schema").get<std::string>() != kInducedDatumSchema)
      throw InputError("induced datum: unsupported schema \"" + j.at("schema").get<std::string>() + "\"");
    InducedDatum d;
    d.field = field_from_json(j.at("field"));
    std::string fl = get_or(j, "flavor", std::string("generic"));
    if (fl == "generic")
      d.flavor = Flavor::generic;
    else if (fl == "discrete_local")
      d.flavor = Flavor::discrete_local;
    else if (fl == "tempered")
      d.flavor = Flavor::tempered;
    else
      throw InputError("induced datum: unknown flavor \"" + fl + "\"");
    d.mixed_k = get_or(j, "mixed_k", false);
    for (const auto& b : j.at("blocks")) d.blocks.push_back({unit_from_json(b.at("unit")), get_or(b, "shift", 0.0)});
    return d;
  });
}

json to_json(const LeviDatum& d) {
  json c = json::array();
  for (const auto& x : d.components) c.push_back(to_json(x));
  return {{"schema", kLeviDatumSchema}, {"field", to_json(d.field)}, {"components", c}};
}

LeviDatum levi_from_json(const json& j) {
  return guarded("Levi datum", [&] {
    if (!j.contains("components")) {
      auto d = datum_from_json(j);
      return LeviDatum{d.field, {d}};
    }
    if (j.contains("schema") && j.at("schema").get<std::string>() != kLeviDatumSchema)
      throw InputError("Levi datum: unsupported schema \"" + j.at("schema").get<std::string>() + "\"");
    LeviDatum d;
    d.field = field_from_json(j.at("field"));
    for (const auto& c : j.at("components")) {
      json cj = c;
      if (!cj.contains("field")) cj["field"] = j.at("field");
      d.components.push_back(datum_from_json(cj));
    }
    return d;
  });
}

json to_json(const ParabolicChart& c) { return {{"parts", c.levi().parts()}, {"sigma", c.one_based_sigma()}}; }

ParabolicChart chart_from_json(const json& j) {
  return guarded("chart", [&] {
    try {
      Composition levi(j.at("parts").get<std::vector<int>>());
      std::vector<int> sigma = j.contains("sigma") ? j.at("sigma").get<std::vector<int>>() : std::vector<int>{};
      if (sigma.empty())
        for (int i = 1; i <= levi.size(); ++i) sigma.push_back(i);
      return ParabolicChart::from_one_based(levi, sigma);
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("chart: ") + e.what());
    }
  });
}

json to_json(const LFactorDescriptor& l) {
  json atoms = json::array();
  for (const auto& a : l.gamma_atoms())
    atoms.push_back({{"kind", a.kind == GammaKind::real ? "gamma_R" : "gamma_C"}, {"shift", to_json(a.shift)}});
  for (const auto& a : l.padic_atoms())
    atoms.push_back({{"kind", "padic"}, {"period", a.period}, {"decay", to_json(a.decay)}, {"turns", to_json(a.turns)}});
  return {{"field", to_json(l.field())}, {"pretty", l.pretty()}, {"atoms", atoms}};
}

json to_json(const PoleSet& p) {
  json prog = json::array();
  for (const auto& a : p.progressions)
    prog.push_back({{"start", to_json(a.start)}, {"step", a.step}, {"multiplicity", a.multiplicity}});
  json zs = json::array();
  for (const auto& z : p.z_points)
    zs.push_back({{"log_q_modulus", to_json(z.log_modulus)},
                  {"turns", to_json(z.turns)},
                  {"z", to_json(z.z(p.q))},
                  {"multiplicity", z.multiplicity}});
  json j = json::object();
  if (!p.progressions.empty()) j["progressions"] = prog;
  if (!p.z_points.empty()) j["z_points"] = zs;
  return j;
}

json to_json(const BoundCertificate& c) {
  json j;
  j["region"] = c.region == RegionKind::annulus ? "annulus" : "strip";
  if (c.region == RegionKind::annulus) {
    j["inner_radius"] = c.inner;
    j["outer_radius"] = c.outer;
  } else {
    j["half_width"] = c.outer;
  }
  j["bound"] = c.bound;
  j["constants"] = c.constants;
  if (c.measured_sup) j["measured_sup"] = *c.measured_sup;
  return j;
}

json to_json(const CheckReport& r) {
  return {{"property", r.property},   {"status", r.passed ? "pass" : "fail"}, {"max_error", r.max_error},
          {"samples_used", r.samples_used}, {"skipped", r.skipped},        {"witnesses", r.witnesses},
          {"notes", r.notes}};
}

json to_json(const HolomorphyVerdict& v) {
  return {{"n", v.n},
          {"max_exponent", to_json(v.max_exponent)},
          {"guaranteed_margin", to_json(v.guaranteed_margin)},
          {"required_margin", to_json(v.required_margin)},
          {"certified", v.certified}};
}

DiscRationalDescriptor disc_descriptor_from_json(const json& j) {
  return guarded("disc descriptor", [&] {
    DiscRationalDescriptor d;
    if (j.contains("scale")) d.scale = complex_from_json(j.at("scale"));
    d.m = get_or(j, "m", 0);
    if (j.contains("zeros")) d.zeros = roots_from_json(j.at("zeros"));
    if (j.contains("poles")) d.poles = roots_from_json(j.at("poles"));
    d.l = get_or(j, "l", std::max(0, d.natural_l()));
    d.bound_on_circle = get_or(j, "bound_on_circle", 1.0);
    return d;
  });
}

StripRational strip_rational_from_json(const json& j) {
  return guarded("strip function", [&] {
    StripRational f;
    if (j.contains("scale")) f.scale = complex_from_json(j.at("scale"));
    if (j.contains("zeros")) f.zeros = roots_from_json(j.at("zeros"));
    if (j.contains("poles")) f.poles = roots_from_json(j.at("poles"));
    return f;
  });
}

StripFunctionDescriptor strip_descriptor_from_json(const json& j) {
  return guarded("strip descriptor", [&] {
    std::vector<cplx> prog;
    if (j.contains("progressions"))
      for (const auto& p : j.at("progressions")) prog.push_back(complex_from_json(p));
    double B = get_or(j, "bound_on_axis", 1.0);
    if (j.contains("function")) return describe_strip_function(strip_rational_from_json(j.at("function")), prog, B);
    StripFunctionDescriptor d;
    d.progressions = prog;
    d.r = get_or(j, "r", static_cast<int>(prog.size()));
    d.M_plus = j.at("M_plus").get<double>();
    d.M_minus = j.at("M_minus").get<double>();
    d.delta = j.at("delta").get<double>();
    d.bound_on_axis = B;
    return d;
  });
}

UniformNonarchInput uniform_input_from_json(const json& j) {
  return guarded("uniform bound input", [&] {
    UniformNonarchInput in;
    if (j.contains("poles")) in.poles = roots_from_json(j.at("poles"));
    int r = 0;
    for (const auto& p : in.poles) r += p.multiplicity;
    in.r_cap = get_or(j, "r_cap", r);
    in.l_cap = get_or(j, "l_cap", 0);
    in.m_floor = get_or(j, "m_floor", 0);
    in.q = j.at("q").get<int>();
    in.n = j.at("n").get<int>();
    in.alpha = get_or(j, "alpha", 1);
    return in;
  });
}

}  // namespace locnorm
