#include "qtcob/serialization.hpp"

#include <algorithm>
#include <set>

namespace qtcob {

namespace {

const json& field(const json& doc, const char* name) {
    auto it = doc.find(name);
    if (it == doc.end())
        throw ParseError(std::string("missing field '") + name + "'");
    return *it;
}

int int_field(const json& doc, const char* name) {
    const json& f = field(doc, name);
    if (!f.is_number_integer())
        throw ParseError(std::string("field '") + name + "' must be an integer");
    return f.get<int>();
}

std::vector<std::string> string_list(const json& doc, const char* what) {
    if (!doc.is_array()) throw ParseError(std::string(what) + " must be an array");
    std::vector<std::string> out;
    out.reserve(doc.size());
    for (const json& item : doc) {
        if (!item.is_string())
            throw ParseError(std::string(what) + " must contain strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

}  // namespace

json to_json(const IntVec& v) {
    json arr = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        // entries round-trip as JSON integers; inputs beyond 64 bits are not
        // accepted on the wire (internal arithmetic is unbounded regardless)
        arr.push_back(static_cast<std::int64_t>(v(i)));
    }
    return arr;
}

IntVec int_vec_from_json(const json& doc) {
    if (!doc.is_array()) throw ParseError("label must be an array of integers");
    IntVec v(static_cast<Eigen::Index>(doc.size()));
    Eigen::Index i = 0;
    for (const json& item : doc) {
        if (!item.is_number_integer())
            throw ParseError("label entries must be integers");
        v(i++) = Int(item.get<std::int64_t>());
    }
    return v;
}

json to_json(const Polytope& p) {
    json doc;
    doc["dim"] = p.dim();
    doc["facets"] = p.facet_names();
    json vertices = json::array();
    for (int v = 0; v < p.vertex_count(); ++v)
        vertices.push_back(p.facet_names_of(p.vertex(v)));
    doc["vertices"] = vertices;
    return doc;
}

Polytope polytope_from_json(const json& doc) {
    if (!doc.is_object()) throw ParseError("polytope document must be an object");
    const int dim = int_field(doc, "dim");
    std::vector<std::string> facets = string_list(field(doc, "facets"), "'facets'");
    const json& vs = field(doc, "vertices");
    if (!vs.is_array()) throw ParseError("'vertices' must be an array");
    std::vector<std::vector<std::string>> vertices;
    vertices.reserve(vs.size());
    for (const json& v : vs) vertices.push_back(string_list(v, "a vertex"));
    return Polytope::from_names(dim, std::move(facets), vertices);
}

std::string vertex_key(const Polytope& p, int v) {
    std::string key;
    const std::vector<std::string> names = p.facet_names_of(p.vertex(v));
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) key += "&";
        key += names[i];
    }
    return key;
}

json to_json(const CharacteristicModel& m) {
    json doc;
    doc["model"] = to_json(m.polytope());
    json labels = json::object();
    for (int f = 0; f < m.polytope().facet_count(); ++f)
        labels[m.polytope().facet_name(f)] = to_json(m.label(f));
    doc["labels"] = labels;
    return doc;
}

CharacteristicModel characteristic_model_from_json(const json& doc) {
    if (!doc.is_object()) throw ParseError("model document must be an object");
    Polytope p = polytope_from_json(field(doc, "model"));
    const json& labels = field(doc, "labels");
    if (!labels.is_object()) throw ParseError("'labels' must be an object");
    std::vector<IntVec> by_facet(static_cast<std::size_t>(p.facet_count()));
    std::vector<bool> seen(static_cast<std::size_t>(p.facet_count()), false);
    for (auto it = labels.begin(); it != labels.end(); ++it) {
        int f;
        try {
            f = p.facet_index(it.key());
        } catch (const std::invalid_argument&) {
            throw ParseError("label on unknown facet '" + it.key() + "'");
        }
        by_facet[static_cast<std::size_t>(f)] = int_vec_from_json(it.value());
        seen[static_cast<std::size_t>(f)] = true;
    }
    for (int f = 0; f < p.facet_count(); ++f) {
        if (!seen[static_cast<std::size_t>(f)])
            throw ParseError("missing label on facet '" + p.facet_name(f) + "'");
    }
    try {
        return CharacteristicModel(std::move(p), std::move(by_facet));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

json to_json(const IsotropyModel& m) {
    json doc;
    json polytope = to_json(m.polytope());
    json exceptional = json::array();
    for (int f : m.marking().facets()) exceptional.push_back(m.polytope().facet_name(f));
    polytope["exceptional"] = exceptional;
    doc["model"] = polytope;
    json labels = json::object();
    for (int f = 0; f < m.polytope().facet_count(); ++f) {
        if (!m.is_exceptional(f))
            labels[m.polytope().facet_name(f)] = to_json(m.label(f));
    }
    doc["labels"] = labels;
    return doc;
}

IsotropyModel isotropy_model_from_json(const json& doc) {
    if (!doc.is_object()) throw ParseError("model document must be an object");
    const json& pdoc = field(doc, "model");
    Polytope p = polytope_from_json(pdoc);
    std::vector<std::string> marked = string_list(field(pdoc, "exceptional"), "'exceptional'");
    ExceptionalMarking marking = [&] {
        try {
            return ExceptionalMarking::from_names(p, marked);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }();

    const json& labels = field(doc, "labels");
    if (!labels.is_object()) throw ParseError("'labels' must be an object");
    std::vector<std::optional<IntVec>> by_facet(static_cast<std::size_t>(p.facet_count()));
    for (auto it = labels.begin(); it != labels.end(); ++it) {
        int f;
        try {
            f = p.facet_index(it.key());
        } catch (const std::invalid_argument&) {
            throw ParseError("label on unknown facet '" + it.key() + "'");
        }
        by_facet[static_cast<std::size_t>(f)] = int_vec_from_json(it.value());
    }
    try {
        return IsotropyModel(std::move(p), std::move(marking), std::move(by_facet));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

json to_json(const OmniorientedModel& m) {
    json doc = to_json(m.model());
    json orientation = json::object();
    for (int v = 0; v < m.polytope().vertex_count(); ++v)
        orientation[vertex_key(m.polytope(), v)] = m.orientation().sign(v);
    doc["orientation"] = orientation;
    json signs = json::object();
    for (int f = 0; f < m.polytope().facet_count(); ++f)
        signs[m.polytope().facet_name(f)] = m.facet_sign(f);
    doc["facet_signs"] = signs;
    return doc;
}

OmniorientedModel omnioriented_model_from_json(const json& doc) {
    CharacteristicModel base = characteristic_model_from_json(doc);
    const Polytope& p = base.polytope();

    OrientationDatum datum = canonical_orientation(p);
    if (doc.contains("orientation")) {
        const json& table = doc["orientation"];
        if (!table.is_object()) throw ParseError("'orientation' must be an object");
        std::vector<int> signs(static_cast<std::size_t>(p.vertex_count()), 0);
        std::map<std::string, int> keys;
        for (int v = 0; v < p.vertex_count(); ++v) keys[vertex_key(p, v)] = v;
        for (auto it = table.begin(); it != table.end(); ++it) {
            auto found = keys.find(it.key());
            if (found == keys.end())
                throw ParseError("orientation entry for unknown vertex '" + it.key() + "'");
            if (!it.value().is_number_integer())
                throw ParseError("orientation signs must be +-1");
            const int s = it.value().get<int>();
            if (s != 1 && s != -1) throw ParseError("orientation signs must be +-1");
            signs[static_cast<std::size_t>(found->second)] = s;
        }
        for (int s : signs)
            if (s == 0) throw ParseError("orientation table must cover every vertex");
        datum = OrientationDatum(std::move(signs));
        if (!orientation_consistent(p, datum))
            throw ParseError("orientation table is not coherent across edges");
    }

    std::vector<int> facet_signs(static_cast<std::size_t>(p.facet_count()), 1);
    if (doc.contains("facet_signs")) {
        const json& table = doc["facet_signs"];
        if (!table.is_object()) throw ParseError("'facet_signs' must be an object");
        for (auto it = table.begin(); it != table.end(); ++it) {
            int f;
            try {
                f = p.facet_index(it.key());
            } catch (const std::invalid_argument&) {
                throw ParseError("facet sign on unknown facet '" + it.key() + "'");
            }
            if (!it.value().is_number_integer())
                throw ParseError("facet signs must be +-1");
            const int s = it.value().get<int>();
            if (s != 1 && s != -1) throw ParseError("facet signs must be +-1");
            facet_signs[static_cast<std::size_t>(f)] = s;
        }
    }
    return OmniorientedModel(std::move(base), std::move(datum), std::move(facet_signs));
}

json to_json(const Issue& issue) {
    json doc;
    doc["code"] = issue.code;
    doc["message"] = issue.message;
    doc["witness"] = issue.facets;
    return doc;
}

json to_json(const ValidationReport& r) {
    json doc;
    doc["ok"] = r.ok;
    json issues = json::array();
    for (const Issue& issue : r.issues) issues.push_back(to_json(issue));
    doc["issues"] = issues;
    return doc;
}

json to_json(const CobordismRelation& r) {
    json doc;
    doc["provenance"] = r.provenance;
    if (r.lambda0.has_value()) doc["lambda0"] = to_json(*r.lambda0);
    if (!r.notes.empty()) doc["notes"] = r.notes;
    json components = json::array();
    for (const RelationComponent& c : r.components) {
        json comp;
        comp["sign"] = c.sign;
        comp["component"] = to_json(c.model);
        comp["smooth"] = is_smooth(c.model.model());
        json orders = json::array();
        std::vector<Int> vo = vertex_orders(c.model.model());
        std::sort(vo.begin(), vo.end());
        for (const Int& o : vo) orders.push_back(static_cast<std::int64_t>(o));
        comp["vertex_orders"] = orders;
        comp["fake_weighted_projective"] = is_simplex(c.model.polytope());
        components.push_back(std::move(comp));
    }
    doc["components"] = components;
    return doc;
}

json to_json(const RelationVerification& v) {
    json doc;
    switch (v.status) {
        case RelationVerification::Status::pass: doc["status"] = "pass"; break;
        case RelationVerification::Status::fail: doc["status"] = "fail"; break;
        case RelationVerification::Status::unverifiable:
            doc["status"] = "unverifiable (orbifold)";
            break;
    }
    if (!v.non_smooth_components.empty())
        doc["non_smooth_components"] = v.non_smooth_components;
    if (!v.sums.empty()) {
        json sums = json::array();
        for (const PartitionSum& ps : v.sums) {
            json entry;
            entry["partition"] = ps.partition.parts();
            entry["sum"] = static_cast<std::int64_t>(ps.sum);
            json per = json::array();
            for (const Int& x : ps.per_component) per.push_back(static_cast<std::int64_t>(x));
            entry["per_component"] = per;
            sums.push_back(std::move(entry));
        }
        doc["partition_sums"] = sums;
        doc["points"] = v.points;
    }
    return doc;
}

json to_json(const HirzebruchReport& r) {
    json doc;
    doc["ok"] = r.ok;
    json issues = json::array();
    for (const Issue& issue : r.issues) issues.push_back(to_json(issue));
    doc["issues"] = issues;
    if (r.relation.has_value()) doc["relation"] = to_json(*r.relation);
    return doc;
}

}  // namespace qtcob
