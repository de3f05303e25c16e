#include "yblie/io.hpp"

#include <json.hpp>

#include "yblie/errors.hpp"
#include "yblie/linalg.hpp"

namespace yblie::io {

using ordered_json = nlohmann::ordered_json;

HomSpace::HomSpace(CategoryContext context, GradedObject sp, GradedObject amb,
                   ExactMorphism incl)
    : ctx(std::move(context)), space(std::move(sp)), ambient(std::move(amb)),
      inclusion(std::move(incl)) {
  if (inclusion.source() != space || inclusion.target() != ambient)
    throw ShapeError("hom space inclusion has the wrong boundary");
}

namespace {

ordered_json field_to_json(const Field& f) {
  ordered_json j;
  switch (f.kind) {
    case FieldKind::Rational: j["kind"] = "rational"; break;
    case FieldKind::GaussianRational: j["kind"] = "gaussian_rational"; break;
    case FieldKind::PrimeField:
      j["kind"] = "prime_field";
      j["p"] = f.p;
      break;
  }
  return j;
}

Field field_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw ParseError("field descriptor must be an object with a 'kind'");
  std::string kind = j["kind"];
  if (kind == "rational") return Field::rational();
  if (kind == "gaussian_rational") return Field::gaussian();
  if (kind == "prime_field") {
    if (!j.contains("p") || !j["p"].is_number_unsigned())
      throw ParseError("prime_field requires an unsigned 'p'");
    return Field::prime(j["p"].get<std::uint32_t>());
  }
  throw ParseError("unknown field kind '" + kind + "'");
}

ordered_json context_to_json(const CategoryContext& ctx) {
  ordered_json j;
  switch (ctx.braiding_flavor()) {
    case BraidingFlavor::Trivial: j["braiding"] = "trivial"; break;
    case BraidingFlavor::Super: j["braiding"] = "super"; break;
    case BraidingFlavor::Anyonic:
      j["braiding"] = "anyonic";
      j["i"] = ctx.root_of_minus_one().to_string();
      break;
  }
  j["associator"] =
      ctx.associator_flavor() == AssociatorFlavor::Trivial ? "trivial" : "sign";
  return j;
}

CategoryContext context_from_json(const Field& f, const ordered_json& j) {
  if (!j.is_object() || !j.contains("braiding") || !j.contains("associator"))
    throw ParseError("context must declare 'braiding' and 'associator'");
  std::string b = j["braiding"], a = j["associator"];
  AssociatorFlavor assoc;
  if (a == "trivial") assoc = AssociatorFlavor::Trivial;
  else if (a == "sign") assoc = AssociatorFlavor::Sign;
  else throw ParseError("unknown associator flavor '" + a + "'");
  if (b == "trivial") return CategoryContext(f, BraidingFlavor::Trivial, assoc);
  if (b == "super") return CategoryContext(f, BraidingFlavor::Super, assoc);
  if (b == "anyonic") {
    std::optional<Scalar> root;
    if (j.contains("i")) root = Scalar::parse(f, j["i"].get<std::string>());
    return CategoryContext(f, BraidingFlavor::Anyonic, assoc, std::move(root));
  }
  throw ParseError("unknown braiding flavor '" + b + "'");
}

ordered_json object_to_json(const GradedObject& x) {
  ordered_json j = ordered_json::array();
  for (auto d : x.degrees()) j.push_back(static_cast<int>(d));
  return j;
}

GradedObject object_from_json(const ordered_json& j) {
  if (!j.is_array()) throw ParseError("object must be an array of degrees");
  std::vector<std::uint8_t> degrees;
  for (const auto& d : j) {
    if (!d.is_number_integer() || (d != 0 && d != 1))
      throw ParseError("degrees must be 0 or 1");
    degrees.push_back(d.get<std::uint8_t>());
  }
  return GradedObject(std::move(degrees));
}

ordered_json matrix_to_json(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

ExactMorphism morphism_from_json(const Field& f, const ordered_json& j,
                                 const GradedObject& src, const GradedObject& tgt,
                                 const std::string& name) {
  if (!j.is_array())
    throw ParseError("morphism '" + name + "' must be an array of rows");
  if (j.size() != tgt.dim())
    throw ShapeError("morphism '" + name + "' has " + std::to_string(j.size()) +
                     " rows, expected " + std::to_string(tgt.dim()));
  Matrix m(f, tgt.dim(), src.dim());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& row = j[i];
    if (!row.is_array() || row.size() != src.dim())
      throw ShapeError("morphism '" + name + "' row " + std::to_string(i) +
                       " has the wrong length");
    for (std::size_t c = 0; c < src.dim(); ++c) {
      if (!row[c].is_string())
        throw ParseError("matrix entries must be scalar strings");
      Scalar v = Scalar::parse(f, row[c].get<std::string>());
      if (!v.is_zero()) m.set(i, c, std::move(v));
    }
  }
  try {
    return ExactMorphism(src, tgt, std::move(m));
  } catch (const ShapeError& e) {
    throw ShapeError("morphism '" + name + "': " + e.what());
  }
}

Side side_from_json(const ordered_json& j) {
  if (!j.contains("side")) return Side::Right;
  std::string s = j["side"];
  if (s == "left") return Side::Left;
  if (s == "right") return Side::Right;
  throw ParseError("side must be 'left' or 'right'");
}

const char* side_name(Side s) { return s == Side::Left ? "left" : "right"; }

struct Header {
  ordered_json field;
  ordered_json context;
  std::string kind;
  ordered_json objects;
  ordered_json morphisms;
};

ordered_json shell(const CategoryContext& ctx, const std::string& kind) {
  ordered_json j;
  j["format_version"] = kFormatVersion;
  j["field"] = field_to_json(ctx.field());
  j["context"] = context_to_json(ctx);
  j["kind"] = kind;
  j["objects"] = ordered_json::object();
  j["morphisms"] = ordered_json::object();
  return j;
}

}  // namespace

std::string kind_name(const Structure& s) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, YBOperator>) return "yb_operator";
        else if constexpr (std::is_same_v<T, YBLieAlgebra>) return "yb_lie_algebra";
        else if constexpr (std::is_same_v<T, YBLieCoalgebra>) return "yb_lie_coalgebra";
        else if constexpr (std::is_same_v<T, YBAlgebra>) return "yb_algebra";
        else if constexpr (std::is_same_v<T, BraidedBialgebra>) return "braided_bialgebra";
        else if constexpr (std::is_same_v<T, LieModule>) return "lie_module";
        else if constexpr (std::is_same_v<T, LieComodule>) return "lie_comodule";
        else if constexpr (std::is_same_v<T, MichaelisPair>) return "michaelis_pair";
        else if constexpr (std::is_same_v<T, TakeuchiPair>) return "takeuchi_pair";
        else if constexpr (std::is_same_v<T, AlgebraModule>) return "algebra_module";
        else return "hom_space";
      },
      s);
}

const CategoryContext& context_of(const Structure& s) {
  return std::visit(
      [](const auto& v) -> const CategoryContext& {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, YBLieAlgebra> || std::is_same_v<T, YBOperator> ||
                      std::is_same_v<T, YBLieCoalgebra> || std::is_same_v<T, YBAlgebra> ||
                      std::is_same_v<T, BraidedBialgebra> || std::is_same_v<T, HomSpace>)
          return v.ctx;
        else if constexpr (std::is_same_v<T, LieModule>)
          return v.algebra.ctx;
        else if constexpr (std::is_same_v<T, LieComodule>)
          return v.coalgebra.ctx;
        else if constexpr (std::is_same_v<T, MichaelisPair>)
          return v.lie.ctx;
        else if constexpr (std::is_same_v<T, TakeuchiPair>)
          return v.h.ctx;
        else
          return v.algebra.ctx;
      },
      s);
}

std::string write_structure(const Structure& s) {
  const CategoryContext& ctx = context_of(s);
  ordered_json j = shell(ctx, kind_name(s));
  auto& objects = j["objects"];
  auto& morphisms = j["morphisms"];

  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, YBOperator>) {
          objects["l"] = object_to_json(v.obj);
          morphisms["c"] = matrix_to_json(v.c.mat());
        } else if constexpr (std::is_same_v<T, YBLieAlgebra>) {
          objects["l"] = object_to_json(v.obj);
          morphisms["lambda"] = matrix_to_json(v.lambda.mat());
          morphisms["bracket"] = matrix_to_json(v.bracket.mat());
        } else if constexpr (std::is_same_v<T, YBLieCoalgebra>) {
          objects["c"] = object_to_json(v.obj);
          morphisms["gamma"] = matrix_to_json(v.gamma.mat());
          morphisms["cobracket"] = matrix_to_json(v.cobracket.mat());
        } else if constexpr (std::is_same_v<T, YBAlgebra>) {
          objects["b"] = object_to_json(v.obj);
          morphisms["mul"] = matrix_to_json(v.mul.mat());
          morphisms["lambda"] = matrix_to_json(v.lambda.mat());
          if (v.unit) morphisms["unit"] = matrix_to_json(v.unit->mat());
        } else if constexpr (std::is_same_v<T, BraidedBialgebra>) {
          objects["h"] = object_to_json(v.obj);
          morphisms["mul"] = matrix_to_json(v.mul.mat());
          morphisms["unit"] = matrix_to_json(v.unit.mat());
          morphisms["comul"] = matrix_to_json(v.comul.mat());
          morphisms["counit"] = matrix_to_json(v.counit.mat());
          morphisms["lambda"] = matrix_to_json(v.lambda.mat());
        } else if constexpr (std::is_same_v<T, LieModule>) {
          objects["l"] = object_to_json(v.algebra.obj);
          objects["x"] = object_to_json(v.carrier);
          j["side"] = side_name(v.side);
          morphisms["lambda"] = matrix_to_json(v.algebra.lambda.mat());
          morphisms["bracket"] = matrix_to_json(v.algebra.bracket.mat());
          morphisms["action"] = matrix_to_json(v.action.mat());
        } else if constexpr (std::is_same_v<T, LieComodule>) {
          objects["c"] = object_to_json(v.coalgebra.obj);
          objects["x"] = object_to_json(v.carrier);
          j["side"] = side_name(v.side);
          morphisms["gamma"] = matrix_to_json(v.coalgebra.gamma.mat());
          morphisms["cobracket"] = matrix_to_json(v.coalgebra.cobracket.mat());
          morphisms["coaction"] = matrix_to_json(v.coaction.mat());
        } else if constexpr (std::is_same_v<T, MichaelisPair>) {
          objects["l"] = object_to_json(v.lie.obj);
          objects["c"] = object_to_json(v.colie.obj);
          morphisms["lambda"] = matrix_to_json(v.lie.lambda.mat());
          morphisms["bracket"] = matrix_to_json(v.lie.bracket.mat());
          morphisms["gamma"] = matrix_to_json(v.colie.gamma.mat());
          morphisms["cobracket"] = matrix_to_json(v.colie.cobracket.mat());
          morphisms["ev"] = matrix_to_json(v.ev.mat());
          if (v.coev) morphisms["coev"] = matrix_to_json(v.coev->mat());
        } else if constexpr (std::is_same_v<T, TakeuchiPair>) {
          objects["h"] = object_to_json(v.h.obj);
          objects["k"] = object_to_json(v.k.obj);
          morphisms["h_mul"] = matrix_to_json(v.h.mul.mat());
          morphisms["h_unit"] = matrix_to_json(v.h.unit.mat());
          morphisms["h_comul"] = matrix_to_json(v.h.comul.mat());
          morphisms["h_counit"] = matrix_to_json(v.h.counit.mat());
          morphisms["h_lambda"] = matrix_to_json(v.h.lambda.mat());
          morphisms["k_mul"] = matrix_to_json(v.k.mul.mat());
          morphisms["k_unit"] = matrix_to_json(v.k.unit.mat());
          morphisms["k_comul"] = matrix_to_json(v.k.comul.mat());
          morphisms["k_counit"] = matrix_to_json(v.k.counit.mat());
          morphisms["k_lambda"] = matrix_to_json(v.k.lambda.mat());
          morphisms["pairing"] = matrix_to_json(v.pairing.mat());
        } else if constexpr (std::is_same_v<T, AlgebraModule>) {
          objects["b"] = object_to_json(v.algebra.obj);
          objects["m"] = object_to_json(v.carrier);
          j["side"] = side_name(v.side);
          morphisms["mul"] = matrix_to_json(v.algebra.mul.mat());
          morphisms["lambda"] = matrix_to_json(v.algebra.lambda.mat());
          if (v.algebra.unit) morphisms["unit"] = matrix_to_json(v.algebra.unit->mat());
          morphisms["action"] = matrix_to_json(v.action.mat());
        } else {
          objects["space"] = object_to_json(v.space);
          objects["ambient"] = object_to_json(v.ambient);
          morphisms["inclusion"] = matrix_to_json(v.inclusion.mat());
        }
      },
      s);
  return j.dump(2) + "\n";
}

Structure parse_structure(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("structure file must be a JSON object");
  if (!j.contains("format_version") || !j["format_version"].is_number_integer())
    throw ParseError("missing format_version");
  if (j["format_version"].get<int>() != kFormatVersion)
    throw ParseError("unsupported format_version " +
                     std::to_string(j["format_version"].get<int>()));
  if (!j.contains("field") || !j.contains("context") || !j.contains("kind") ||
      !j.contains("objects") || !j.contains("morphisms"))
    throw ParseError("missing one of: field, context, kind, objects, morphisms");

  Field f = field_from_json(j["field"]);
  CategoryContext ctx = context_from_json(f, j["context"]);
  std::string kind = j["kind"];
  const ordered_json& objects = j["objects"];
  const ordered_json& morphisms = j["morphisms"];

  auto obj = [&](const char* name) {
    if (!objects.contains(name))
      throw ParseError(std::string("missing object '") + name + "'");
    return object_from_json(objects[name]);
  };
  auto mor = [&](const char* name, const GradedObject& src, const GradedObject& tgt) {
    if (!morphisms.contains(name))
      throw ParseError(std::string("missing morphism '") + name + "'");
    return morphism_from_json(f, morphisms[name], src, tgt, name);
  };
  GradedObject unit_obj = GradedObject::unit();

  try {
    if (kind == "yb_operator") {
      GradedObject l = obj("l");
      GradedObject sq = tensor(l, l);
      return YBOperator(ctx, l, mor("c", sq, sq));
    }
    if (kind == "yb_lie_algebra") {
      GradedObject l = obj("l");
      GradedObject sq = tensor(l, l);
      return YBLieAlgebra(ctx, l, mor("lambda", sq, sq), mor("bracket", sq, l));
    }
    if (kind == "yb_lie_coalgebra") {
      GradedObject c = obj("c");
      GradedObject sq = tensor(c, c);
      return YBLieCoalgebra(ctx, c, mor("gamma", sq, sq), mor("cobracket", c, sq));
    }
    if (kind == "yb_algebra") {
      GradedObject b = obj("b");
      GradedObject sq = tensor(b, b);
      std::optional<ExactMorphism> unit;
      if (morphisms.contains("unit")) unit = mor("unit", unit_obj, b);
      return YBAlgebra(ctx, b, mor("mul", sq, b), mor("lambda", sq, sq),
                       std::move(unit));
    }
    if (kind == "braided_bialgebra") {
      GradedObject h = obj("h");
      GradedObject sq = tensor(h, h);
      return BraidedBialgebra(ctx, h, mor("mul", sq, h), mor("unit", unit_obj, h),
                              mor("comul", h, sq), mor("counit", h, unit_obj),
                              mor("lambda", sq, sq));
    }
    if (kind == "lie_module") {
      GradedObject l = obj("l");
      GradedObject x = obj("x");
      GradedObject sq = tensor(l, l);
      Side side = side_from_json(j);
      YBLieAlgebra alg(ctx, l, mor("lambda", sq, sq), mor("bracket", sq, l));
      GradedObject dom = side == Side::Right ? tensor(x, l) : tensor(l, x);
      return LieModule(std::move(alg), x, mor("action", dom, x), side);
    }
    if (kind == "lie_comodule") {
      GradedObject c = obj("c");
      GradedObject x = obj("x");
      GradedObject sq = tensor(c, c);
      Side side = side_from_json(j);
      YBLieCoalgebra coalg(ctx, c, mor("gamma", sq, sq), mor("cobracket", c, sq));
      GradedObject cod = side == Side::Right ? tensor(x, c) : tensor(c, x);
      return LieComodule(std::move(coalg), x, mor("coaction", x, cod), side);
    }
    if (kind == "michaelis_pair") {
      GradedObject l = obj("l");
      GradedObject c = obj("c");
      GradedObject lsq = tensor(l, l);
      GradedObject csq = tensor(c, c);
      YBLieAlgebra alg(ctx, l, mor("lambda", lsq, lsq), mor("bracket", lsq, l));
      YBLieCoalgebra coalg(ctx, c, mor("gamma", csq, csq), mor("cobracket", c, csq));
      MichaelisPair pair(std::move(alg), std::move(coalg),
                         mor("ev", tensor(l, c), unit_obj));
      if (morphisms.contains("coev"))
        pair.coev = mor("coev", unit_obj, tensor(c, l));
      return pair;
    }
    if (kind == "takeuchi_pair") {
      GradedObject h = obj("h");
      GradedObject k = obj("k");
      GradedObject hsq = tensor(h, h);
      GradedObject ksq = tensor(k, k);
      BraidedBialgebra bh(ctx, h, mor("h_mul", hsq, h), mor("h_unit", unit_obj, h),
                          mor("h_comul", h, hsq), mor("h_counit", h, unit_obj),
                          mor("h_lambda", hsq, hsq));
      BraidedBialgebra bk(ctx, k, mor("k_mul", ksq, k), mor("k_unit", unit_obj, k),
                          mor("k_comul", k, ksq), mor("k_counit", k, unit_obj),
                          mor("k_lambda", ksq, ksq));
      return TakeuchiPair(std::move(bh), std::move(bk),
                          mor("pairing", tensor(h, k), unit_obj));
    }
    if (kind == "algebra_module") {
      GradedObject b = obj("b");
      GradedObject m = obj("m");
      GradedObject sq = tensor(b, b);
      Side side = side_from_json(j);
      std::optional<ExactMorphism> unit;
      if (morphisms.contains("unit")) unit = mor("unit", unit_obj, b);
      YBAlgebra alg(ctx, b, mor("mul", sq, b), mor("lambda", sq, sq),
                    std::move(unit));
      GradedObject dom = side == Side::Right ? tensor(m, b) : tensor(b, m);
      return AlgebraModule(std::move(alg), m, mor("action", dom, m), side);
    }
    if (kind == "hom_space") {
      GradedObject space = obj("space");
      GradedObject ambient = obj("ambient");
      return HomSpace(ctx, space, ambient, mor("inclusion", space, ambient));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed structure payload: ") + e.what());
  }
  throw ParseError("unknown structure kind '" + kind + "'");
}

CheckReport check_structure(const Structure& s) {
  return std::visit(
      [](const auto& v) -> CheckReport {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, YBOperator>) return check_yb_operator(v);
        else if constexpr (std::is_same_v<T, YBLieAlgebra>) return check_yb_lie_algebra(v);
        else if constexpr (std::is_same_v<T, YBLieCoalgebra>) return check_yb_lie_coalgebra(v);
        else if constexpr (std::is_same_v<T, YBAlgebra>) return check_yb_algebra(v);
        else if constexpr (std::is_same_v<T, BraidedBialgebra>) return check_braided_bialgebra(v);
        else if constexpr (std::is_same_v<T, LieModule>) return check_lie_module(v);
        else if constexpr (std::is_same_v<T, LieComodule>) return check_lie_comodule(v);
        else if constexpr (std::is_same_v<T, MichaelisPair>) return check_michaelis_pair(v);
        else if constexpr (std::is_same_v<T, TakeuchiPair>) return check_takeuchi(v);
        else if constexpr (std::is_same_v<T, AlgebraModule>) return check_algebra_module(v);
        else {
          CheckReport report;
          AxiomResult r;
          r.name = "inclusion_mono";
          r.pass = rank(v.inclusion.mat()) == v.space.dim();
          if (!r.pass)
            r.witness = Witness{0, 0, Scalar::zero(v.ctx.field()),
                                Scalar::zero(v.ctx.field())};
          report.add(std::move(r));
          return report;
        }
      },
      s);
}

std::string digest_hex(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

std::string report_to_json(const ReportDocument& doc) {
  ordered_json j;
  j["tool_version"] = kToolVersion;
  j["kind"] = doc.kind;
  j["input_digest"] = doc.input_digest;
  j["overall_pass"] = doc.report.all_pass();
  ordered_json axioms = ordered_json::array();
  for (const auto& a : doc.report.axioms()) {
    ordered_json ja;
    ja["name"] = a.name;
    ja["pass"] = a.pass;
    if (a.witness) {
      ordered_json w;
      w["row"] = a.witness->row;
      w["col"] = a.witness->col;
      w["lhs"] = a.witness->lhs.to_string();
      w["rhs"] = a.witness->rhs.to_string();
      ja["witness"] = std::move(w);
    }
    axioms.push_back(std::move(ja));
  }
  j["axioms"] = std::move(axioms);
  return j.dump(2) + "\n";
}

std::string report_to_text(const ReportDocument& doc) {
  std::string out;
  out += "kind: " + doc.kind + "\n";
  out += "input_digest: " + doc.input_digest + "\n";
  for (const auto& a : doc.report.axioms()) {
    out += a.pass ? "  [pass] " : "  [FAIL] ";
    out += a.name;
    if (a.witness) {
      out += "  at (" + std::to_string(a.witness->row) + "," +
             std::to_string(a.witness->col) + "): " +
             a.witness->lhs.to_string() + " != " + a.witness->rhs.to_string();
    }
    out += "\n";
  }
  out += doc.report.all_pass() ? "overall: pass\n" : "overall: FAIL\n";
  return out;
}

}  // namespace yblie::io
