#include "padspec/json_io.hpp"

namespace padspec {

namespace {

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name))
        throw InputError(std::string("missing field '") + name + "'");
    return j.at(name);
}

std::int64_t int_field(const Json& j, const char* name) {
    const Json& f = field(j, name);
    if (!f.is_number_integer()) throw InputError(std::string("field '") + name +
                                                 "' must be an integer");
    return f.get<std::int64_t>();
}

std::string string_field(const Json& j, const char* name) {
    const Json& f = field(j, name);
    if (!f.is_string())
        throw InputError(std::string("field '") + name + "' must be a string");
    return f.get<std::string>();
}

BigInt bigint_from_string(const std::string& s) {
    try {
        return BigInt(s);
    } catch (const std::exception&) {
        throw InputError("not a decimal integer: " + s);
    }
}

}  // namespace

Json scalar_to_json(const PadicScalar& x) {
    Json j;
    j["p"] = x.prime();
    j["precision"] = x.precision();
    if (x.is_zero()) {
        j["zero"] = true;
    } else {
        j["valuation"] = x.valuation();
        j["unit"] = x.unit().str();
    }
    return j;
}

PadicScalar scalar_from_json(const Json& j) {
    std::int64_t p = int_field(j, "p");
    auto precision = static_cast<std::int32_t>(int_field(j, "precision"));
    if (j.contains("zero")) {
        if (!j.at("zero").is_boolean() || !j.at("zero").get<bool>())
            throw InputError("field 'zero' must be true when present");
        return PadicScalar::zero(p, precision);
    }
    std::int64_t v = int_field(j, "valuation");
    BigInt unit = bigint_from_string(string_field(j, "unit"));
    return PadicScalar::from_unit(p, precision, v, unit);
}

Json lognorm_to_json(const LogNorm& n) { return Json{{"exponent", n.exponent_string()}}; }

LogNorm lognorm_from_json(const Json& j) {
    return LogNorm::from_exponent_string(string_field(j, "exponent"));
}

Json space_to_json(const WeightedSpace& s) {
    Json omega = Json::array();
    for (std::size_t i = 0; i < s.dim(); ++i) omega.push_back(scalar_to_json(s.omega(i)));
    return Json{{"p", s.prime()}, {"precision", s.precision()}, {"omega", omega}};
}

SpacePtr space_from_json(const Json& j) {
    std::int64_t p = int_field(j, "p");
    auto precision = static_cast<std::int32_t>(int_field(j, "precision"));
    const Json& omega = field(j, "omega");
    if (!omega.is_array()) throw InputError("field 'omega' must be an array");
    std::vector<PadicScalar> w;
    for (const auto& e : omega) w.push_back(scalar_from_json(e));
    return WeightedSpace::make(p, precision, std::move(w));
}

Json vector_to_json(const Vector& x) {
    Json coords = Json::array();
    for (std::size_t i = 0; i < x.dim(); ++i) coords.push_back(scalar_to_json(x[i]));
    return Json{{"space", space_to_json(*x.space())}, {"coords", coords}};
}

Vector vector_from_json(const Json& j) {
    SpacePtr sp = space_from_json(field(j, "space"));
    const Json& coords = field(j, "coords");
    if (!coords.is_array()) throw InputError("field 'coords' must be an array");
    std::vector<PadicScalar> c;
    for (const auto& e : coords) c.push_back(scalar_from_json(e));
    return Vector(std::move(sp), std::move(c));
}

namespace {

Json entries_to_json(const Operator& u) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < u.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < u.dim(); ++j) row.push_back(scalar_to_json(u.entry(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Operator entries_from_json(const Json& rows, const SpacePtr& sp) {
    if (!rows.is_array() || rows.size() != sp->dim())
        throw InputError("entries must be a dim x dim array");
    std::vector<PadicScalar> flat;
    flat.reserve(sp->dim() * sp->dim());
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != sp->dim())
            throw InputError("entries must be a dim x dim array");
        for (const auto& e : row) flat.push_back(scalar_from_json(e));
    }
    return Operator(sp, std::move(flat));
}

}  // namespace

Json operator_to_json(const Operator& u) {
    return Json{{"space", space_to_json(*u.space())}, {"entries", entries_to_json(u)}};
}

Operator operator_from_json(const Json& j) {
    SpacePtr sp = space_from_json(field(j, "space"));
    return entries_from_json(field(j, "entries"), sp);
}

Json belement_to_json(const BElement& u) {
    Json partition = Json::array();
    for (const auto& block : u.partition()) {
        Json b = Json::array();
        for (auto i : block) b.push_back(i);
        partition.push_back(std::move(b));
    }
    Json alphas = Json::array();
    for (const auto& a : u.alphas()) alphas.push_back(scalar_to_json(a));
    return Json{{"space", space_to_json(*u.space())},
                {"partition", partition},
                {"alpha0", scalar_to_json(u.alpha0())},
                {"alphas", alphas}};
}

BElement belement_from_json(const Json& j) {
    SpacePtr sp = space_from_json(field(j, "space"));
    const Json& partition = field(j, "partition");
    if (!partition.is_array()) throw InputError("field 'partition' must be an array");
    std::vector<IndexSubset> blocks;
    for (const auto& b : partition) {
        if (!b.is_array()) throw InputError("partition blocks must be arrays");
        IndexSubset block;
        for (const auto& i : b) {
            if (!i.is_number_unsigned()) throw InputError("block indices must be unsigned");
            block.push_back(i.get<std::size_t>());
        }
        blocks.push_back(std::move(block));
    }
    PadicScalar alpha0 = scalar_from_json(field(j, "alpha0"));
    const Json& alphas = field(j, "alphas");
    if (!alphas.is_array()) throw InputError("field 'alphas' must be an array");
    std::vector<PadicScalar> a;
    for (const auto& e : alphas) a.push_back(scalar_from_json(e));
    return BElement(std::move(sp), std::move(blocks), std::move(alpha0), std::move(a));
}

Json algebra_to_json(const ClopenAlgebra& a) {
    if (a.kind() == ClopenAlgebra::Kind::zp)
        return Json{{"kind", "zp"}, {"p", a.zp_prime()}, {"resolution", a.zp_resolution()}};
    return Json{{"kind", "finite"}, {"atoms", a.atom_labels()}};
}

AlgebraPtr algebra_from_json(const Json& j) {
    std::string kind = string_field(j, "kind");
    if (kind == "zp") {
        return ClopenAlgebra::zp(int_field(j, "p"),
                                 static_cast<std::int32_t>(int_field(j, "resolution")));
    }
    if (kind == "finite") {
        const Json& atoms = field(j, "atoms");
        if (!atoms.is_array()) throw InputError("field 'atoms' must be an array");
        std::vector<std::string> labels;
        for (const auto& a : atoms) {
            if (!a.is_string()) throw InputError("atom labels must be strings");
            labels.push_back(a.get<std::string>());
        }
        return ClopenAlgebra::finite(std::move(labels));
    }
    throw InputError("unknown algebra kind: " + kind);
}

Json clopen_set_to_json(const ClopenSet& s) {
    Json j = Json::array();
    for (const auto& l : s.labels()) j.push_back(l);
    return j;
}

ClopenSet clopen_set_from_json(const Json& j, const AlgebraPtr& algebra) {
    if (!j.is_array()) throw InputError("clopen set must be an array of atom labels");
    std::vector<std::string> labels;
    for (const auto& l : j) {
        if (!l.is_string()) throw InputError("atom labels must be strings");
        labels.push_back(l.get<std::string>());
    }
    return ClopenSet::of_labels(algebra, labels);
}

Json pvm_to_json(const ProjectionValuedMeasure& p) {
    Json projectors = Json::object();
    for (std::size_t i = 0; i < p.algebra()->atom_count(); ++i)
        projectors[p.algebra()->atom_label(i)] = entries_to_json(p.atom_projector(i));
    return Json{{"algebra", algebra_to_json(*p.algebra())},
                {"space", space_to_json(*p.space())},
                {"projectors", projectors}};
}

namespace {

Operator table_entry_from_json(const Json& v, const SpacePtr& sp) {
    // accept either a bare entries matrix or a full operator object
    if (v.is_object() && v.contains("entries")) {
        Operator u = operator_from_json(v);
        require_same_space(u.space(), sp);
        return entries_from_json(v.at("entries"), sp);
    }
    return entries_from_json(v, sp);
}

std::vector<Operator> operator_table_from_json(const Json& table, const AlgebraPtr& algebra,
                                               const SpacePtr& sp) {
    if (!table.is_object()) throw InputError("operator table must be an object");
    std::vector<Operator> ops;
    for (std::size_t i = 0; i < algebra->atom_count(); ++i) {
        const std::string& label = algebra->atom_label(i);
        if (!table.contains(label))
            throw InputError("missing table entry for atom '" + label + "'");
        ops.push_back(table_entry_from_json(table.at(label), sp));
    }
    for (const auto& [key, _] : table.items())
        if (!algebra->atom_index(key))
            throw InputError("table entry for unknown atom '" + key + "'");
    return ops;
}

}  // namespace

ProjectionValuedMeasure pvm_from_json(const Json& j) {
    AlgebraPtr algebra = algebra_from_json(field(j, "algebra"));
    SpacePtr sp = space_from_json(field(j, "space"));
    auto ops = operator_table_from_json(field(j, "projectors"), algebra, sp);
    return ProjectionValuedMeasure::make(std::move(algebra), std::move(sp), std::move(ops));
}

Json step_to_json(const StepFunction& f) {
    Json pieces = Json::array();
    for (std::size_t i = 0; i < f.algebra()->atom_count(); ++i) {
        if (f.value(i).is_zero()) continue;
        pieces.push_back(Json{{"set", Json::array({f.algebra()->atom_label(i)})},
                              {"value", scalar_to_json(f.value(i))}});
    }
    return Json{{"algebra", algebra_to_json(*f.algebra())}, {"pieces", pieces}};
}

StepFunction step_from_json(const Json& j, const AlgebraPtr& algebra, std::int64_t p,
                            std::int32_t precision) {
    const Json& pieces = field(j, "pieces");
    if (!pieces.is_array()) throw InputError("field 'pieces' must be an array");
    std::vector<std::pair<ClopenSet, PadicScalar>> parsed;
    for (const auto& piece : pieces) {
        parsed.emplace_back(clopen_set_from_json(field(piece, "set"), algebra),
                            scalar_from_json(field(piece, "value")));
    }
    return StepFunction(algebra, parsed, p, precision);
}

StepFunction step_from_json(const Json& j) {
    AlgebraPtr algebra = algebra_from_json(field(j, "algebra"));
    const Json& pieces = field(j, "pieces");
    if (!pieces.is_array() || pieces.empty())
        throw InputError("standalone step function needs at least one piece");
    PadicScalar probe = scalar_from_json(field(pieces.at(0), "value"));
    return step_from_json(j, algebra, probe.prime(), probe.precision());
}

Json kmeasure_to_json(const KMeasure& mu) {
    Json values = Json::object();
    for (std::size_t i = 0; i < mu.algebra()->atom_count(); ++i)
        values[mu.algebra()->atom_label(i)] = scalar_to_json(mu.atom_value(i));
    return Json{{"algebra", algebra_to_json(*mu.algebra())}, {"values", values}};
}

KMeasure kmeasure_from_json(const Json& j) {
    AlgebraPtr algebra = algebra_from_json(field(j, "algebra"));
    const Json& values = field(j, "values");
    if (!values.is_object()) throw InputError("field 'values' must be an object");
    std::vector<PadicScalar> atom_values;
    for (std::size_t i = 0; i < algebra->atom_count(); ++i) {
        const std::string& label = algebra->atom_label(i);
        if (!values.contains(label))
            throw InputError("missing value for atom '" + label + "'");
        atom_values.push_back(scalar_from_json(values.at(label)));
    }
    return KMeasure(std::move(algebra), std::move(atom_values));
}

Json rep_to_json(const FiniteRepresentation& t) {
    Json table = Json::object();
    for (std::size_t i = 0; i < t.algebra()->atom_count(); ++i)
        table[t.algebra()->atom_label(i)] = entries_to_json(t.atom_operator(i));
    return Json{{"algebra", algebra_to_json(*t.algebra())},
                {"space", space_to_json(*t.space())},
                {"table", table}};
}

FiniteRepresentation rep_from_json(const Json& j) {
    AlgebraPtr algebra = algebra_from_json(field(j, "algebra"));
    SpacePtr sp = space_from_json(field(j, "space"));
    auto ops = operator_table_from_json(field(j, "table"), algebra, sp);
    return FiniteRepresentation(std::move(algebra), std::move(sp), std::move(ops));
}

Json decomposition_to_json(const SpectralDecomposition& d) {
    Json support = Json::array();
    for (const auto& v : d.support) support.push_back(scalar_to_json(v));
    return Json{{"support", support}, {"pvm", pvm_to_json(d.pvm)}};
}

SpectralDecomposition decomposition_from_json(const Json& j) {
    const Json& support = field(j, "support");
    if (!support.is_array()) throw InputError("field 'support' must be an array");
    std::vector<PadicScalar> values;
    for (const auto& v : support) values.push_back(scalar_from_json(v));
    return SpectralDecomposition{std::move(values), pvm_from_json(field(j, "pvm"))};
}

}  // namespace padspec
