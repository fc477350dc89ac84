#include "pencils/report.hpp"

#include <sstream>

#include <json.hpp>

namespace pencils {

namespace {

using json = nlohmann::ordered_json;

const std::vector<std::string> kVars = {"X", "Y", "Z"};
const char* kPlaneNames[] = {"plane:X", "plane:Y", "plane:Z"};

json cluster_to_json(const Cluster& cluster) {
    json points = json::array();
    for (auto& p : cluster.points()) {
        json jp;
        jp["id"] = p.id;
        jp["level"] = p.level;
        jp["parent"] = p.parent;
        jp["proximate_to"] = p.proximate_to;
        if (p.parent < 0) {
            jp["chart"] = kPlaneNames[p.plane_var];
            jp["center"] = {p.px.to_string(), p.py.to_string()};
        } else {
            jp["chart"] =
                p.chart == BlowupChart::XPrimary ? "finite" : "infinity";
            jp["center"] = p.center.to_string();
        }
        jp["mult"] = p.generic_mult;
        points.push_back(std::move(jp));
    }
    return points;
}

json field_to_json(const FieldPtr& field) {
    json jf;
    jf["generator"] = field->generator_symbol();
    json coeffs = json::array();
    for (auto& c : field->min_poly()) coeffs.push_back(rational_to_string(c));
    jf["min_poly"] = std::move(coeffs);
    jf["degree"] = field->degree();
    return jf;
}

}  // namespace

std::string render_json(const ParsedInput& input, const DriverResult& result) {
    json doc;
    doc["input"]["field"] = field_to_json(input.field);
    doc["input"]["F"] = input.f_text;
    doc["input"]["G"] = input.g_text;
    doc["base_points"] = cluster_to_json(result.cluster);

    json summary = json::array();
    for (size_t i = 0; i < result.candidate_counts.size(); ++i) {
        json entry;
        entry["degree"] = static_cast<int>(i) + 1;
        entry["count"] = result.candidate_counts[i];
        if (i < result.candidates.size()) {
            json dump = json::array();
            for (auto& w : result.candidates[i]) dump.push_back(w.v);
            entry["candidates"] = std::move(dump);
        }
        summary.push_back(std::move(entry));
    }
    doc["candidates_summary"] = std::move(summary);

    json comps = json::array();
    for (auto& c : result.components) {
        json jc;
        jc["degree"] = c.degree;
        jc["equation"] = c.form.to_string(kVars);
        jc["v"] = c.candidate.v;
        jc["actual_mults"] = c.actual_mults;
        comps.push_back(std::move(jc));
    }
    doc["components"] = std::move(comps);

    json fibers = json::array();
    for (auto& f : result.fibers) {
        json jf;
        jf["lambda"] = f.lambda.to_string();
        jf["mu"] = f.mu.to_string();
        json fac = json::array();
        for (auto& [ci, exp] : f.factorization)
            fac.push_back({{"component", ci}, {"exponent", exp}});
        jf["factorization"] = std::move(fac);
        jf["member"] = f.member_form.to_string(kVars);
        fibers.push_back(std::move(jf));
    }
    doc["fibers"] = std::move(fibers);

    json ver = json::array();
    for (auto& entry : result.verification) {
        json je;
        je["fiber"] = entry.fiber;
        je["pass"] = entry.pass;
        je["detail"] = entry.detail;
        ver.push_back(std::move(je));
    }
    doc["verification"] = std::move(ver);

    return doc.dump(2) + "\n";
}

std::string render_text(const ParsedInput& input, const DriverResult& result,
                        double seconds) {
    std::ostringstream os;
    os << "field: ";
    if (input.field->degree() == 1) {
        os << "Q\n";
    } else {
        os << "Q(" << input.field->generator_symbol() << "), min_poly";
        for (auto& c : input.field->min_poly())
            os << " " << rational_to_string(c);
        os << "\n";
    }
    os << "F = " << input.f_text << "\n";
    os << "G = " << input.g_text << "\n\n";

    os << "base points (" << result.cluster.size() << "):\n"
       << result.cluster.describe() << "\n";

    os << "candidates per degree:";
    for (size_t i = 0; i < result.candidate_counts.size(); ++i)
        os << " e=" << i + 1 << ":" << result.candidate_counts[i];
    os << "\n\n";

    os << "integral components of special fibers ("
       << result.components.size() << "):\n";
    for (size_t i = 0; i < result.components.size(); ++i)
        os << "  [" << i << "] degree " << result.components[i].degree << ": "
           << result.components[i].form.to_string(kVars) << " = 0\n";
    os << "\n";

    os << "special fibers (" << result.fibers.size() << "):\n";
    for (auto& f : result.fibers) {
        os << "  (" << f.lambda.to_string() << " : " << f.mu.to_string()
           << ")*: ";
        bool first = true;
        for (auto& [ci, exp] : f.factorization) {
            if (!first) os << " * ";
            first = false;
            os << "[" << ci << "]";
            if (exp > 1) os << "^" << exp;
        }
        os << "\n";
    }
    os << "\n";

    int failures = 0;
    for (auto& entry : result.verification)
        if (!entry.pass) ++failures;
    if (result.verification.empty())
        os << "verification: skipped\n";
    else if (failures == 0)
        os << "verification: all " << result.verification.size()
           << " checks passed\n";
    else
        os << "verification: " << failures << " FAILED\n";

    os << "elapsed: " << seconds << " s\n";
    return os.str();
}

}  // namespace pencils
