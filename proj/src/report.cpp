#include "symstab/report.hpp"

#include <iomanip>
#include <sstream>

namespace symstab::report {

Json rational_json(const Rational& r) {
    Json j;
    j["num"] = numerator(r).str();
    j["den"] = denominator(r).str();
    return j;
}

Json partition_json(const Partition& p) {
    Json j = Json::array();
    for (int x : p.parts) j.push_back(x);
    return j;
}

Json multiplicity_table_json(const chars::MultiplicityTable& t) {
    Json rows = Json::array();
    for (const auto& [lam, m] : t.entries) {
        Json row;
        row["partition"] = partition_json(lam);
        row["stable"] = partition_json(to_stable(lam, t.n).mu);
        row["mult"] = m;
        row["dim"] = chars::dimension(lam).str();
        rows.push_back(std::move(row));
    }
    Json j;
    j["n"] = t.n;
    j["multiplicities"] = std::move(rows);
    j["total_dim"] = t.total_dimension().str();
    return j;
}

std::string multiplicity_table_text(const chars::MultiplicityTable& t, bool stable_notation) {
    std::ostringstream os;
    os << std::left << std::setw(16) << "partition";
    if (stable_notation) os << std::setw(12) << "stable";
    os << std::setw(6) << "mult" << "dim\n";
    for (const auto& [lam, m] : t.entries) {
        os << std::left << std::setw(16) << lam.to_string();
        if (stable_notation) os << std::setw(12) << to_stable(lam, t.n).to_string();
        os << std::setw(6) << m << chars::dimension(lam).str() << '\n';
    }
    os << "total dim " << t.total_dimension().str() << '\n';
    return os.str();
}

Json subset_vector_json(const SubsetVector& v) {
    Json terms = Json::array();
    for (const auto& [a, c] : v.terms()) {
        Json term;
        term["coeff"] = rational_json(c);
        Json subset = Json::array();
        for (int x : mask_elements(a)) subset.push_back(x);
        term["subset"] = std::move(subset);
        terms.push_back(std::move(term));
    }
    return terms;
}

std::string factored_basis_string(const squarefree::DeltaPair& dp, int n, int k, int i) {
    std::ostringstream os;
    for (const auto& [h, j] : dp.pairs) os << "(x_" << h << "-x_" << j << ")";
    std::vector<int> rest = mask_elements(full_mask(n) & ~dp.points());
    int m = k - i;
    if (m == 1) {
        os << '(';
        for (std::size_t t = 0; t < rest.size(); ++t) {
            if (t) os << '+';
            os << "x_" << rest[t];
        }
        os << ')';
    } else if (m > 1) {
        os << "sigma_" << m << '(';
        for (std::size_t t = 0; t < rest.size(); ++t) {
            if (t) os << ',';
            os << "x_" << rest[t];
        }
        os << ')';
    } else if (dp.pairs.empty()) {
        os << '1';
    }
    return os.str();
}

Json character_json(const chars::CharacterFn& f) {
    Json rows = Json::array();
    for (const ConjugacyClass& cc : conjugacy_classes(f.n)) {
        Partition cls = cc.type.to_partition();
        Json row;
        row["class"] = partition_json(cls);
        row["class_size"] = cc.size.str();
        row["value"] = rational_json(f.at(cls));
        rows.push_back(std::move(row));
    }
    Json j;
    j["n"] = f.n;
    j["values"] = std::move(rows);
    return j;
}

std::string character_text(const chars::CharacterFn& f) {
    std::ostringstream os;
    os << std::left << std::setw(18) << "class" << std::setw(10) << "size" << "value\n";
    for (const ConjugacyClass& cc : conjugacy_classes(f.n)) {
        Partition cls = cc.type.to_partition();
        os << std::left << std::setw(18) << cls.to_string() << std::setw(10) << cc.size.str()
           << to_string(f.at(cls)) << '\n';
    }
    return os.str();
}

namespace {
Json stable_map_json(const std::map<Partition, long>& m) {
    Json rows = Json::array();
    for (const auto& [mu, c] : m) {
        Json row;
        row["stable_type"] = partition_json(mu);
        row["count"] = c;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string mu_to_string(const Partition& mu) {
    if (mu.parts.empty()) return "(0)";
    return mu.to_string();
}
}  // namespace

Json rep_report_json(const stability::RepStabilityReport& r) {
    Json j;
    j["family"] = r.family;
    j["window"] = Json::array({r.n_min, r.n_max});
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        Json rj;
        rj["n"] = row.n;
        rj["multiplicities"] = multiplicity_table_json(row.table)["multiplicities"];
        if (row.has_orbit_inventory) rj["orbit_inventory"] = stable_map_json(row.orbit_inventory);
        rj["consistent"] = row.consistent;
        rj["injective"] = row.injective;
        if (row.surjective.has_value())
            rj["surjective"] = *row.surjective;
        else
            rj["surjective"] = nullptr;
        if (row.monotone.has_value()) {
            Json mj = Json::array();
            for (const auto& [mu, ok] : row.monotone->by_label) {
                Json e;
                e["stable_type"] = partition_json(mu);
                e["required"] = row.monotone->required.at(mu);
                e["found"] = row.monotone->found.at(mu);
                e["ok"] = ok;
                mj.push_back(std::move(e));
            }
            rj["monotone"] = std::move(mj);
        } else {
            rj["monotone"] = nullptr;
        }
        if (!row.notes.empty()) rj["notes"] = row.notes;
        rows.push_back(std::move(rj));
    }
    j["per_n"] = std::move(rows);
    if (r.multiplicities_stable_from)
        j["multiplicities_stable_from"] = *r.multiplicities_stable_from;
    else
        j["multiplicities_stable_from"] = nullptr;
    Json onsets = Json::array();
    for (const auto& [mu, ov] : r.orbit_counts_stable_from) {
        Json e;
        e["stable_type"] = partition_json(mu);
        e["from"] = ov.first;
        e["count"] = ov.second;
        onsets.push_back(std::move(e));
    }
    j["orbit_counts_stable_from"] = std::move(onsets);
    j["monotonic_checked_upto"] = r.monotonic_checked_upto;
    j["monotonic_all"] = r.monotonic_all;
    j["verdict"] = r.verdict;
    return j;
}

std::string rep_report_text(const stability::RepStabilityReport& r) {
    std::ostringstream os;
    os << "family " << r.family << ", window [" << r.n_min << "," << r.n_max << "]\n";
    for (const auto& row : r.rows) {
        os << "n=" << row.n << ": ";
        bool first = true;
        for (const auto& [mu, m] : row.stable_table) {
            if (!first) os << " + ";
            if (m != 1) os << m << "*";
            os << "V" << mu_to_string(mu);
            first = false;
        }
        os << "  [consistent=" << (row.consistent ? "yes" : "NO")
           << " injective=" << (row.injective ? "yes" : "NO") << " surjective="
           << (row.surjective.has_value() ? (*row.surjective ? "yes" : "NO") : "unchecked");
        if (row.monotone.has_value())
            os << " monotone=" << (row.monotone->all() ? "yes" : "NO");
        os << "]\n";
        if (row.has_orbit_inventory) {
            os << "      orbit counts: ";
            first = true;
            for (const auto& [mu, c] : row.orbit_inventory) {
                if (!first) os << ", ";
                os << mu_to_string(mu) << ":" << c;
                first = false;
            }
            os << '\n';
        }
        for (const auto& note : row.notes) os << "      note: " << note << '\n';
    }
    if (r.multiplicities_stable_from)
        os << "stable multiplicities constant from n=" << *r.multiplicities_stable_from << '\n';
    else
        os << "stable-multiplicity constancy not observed in the window\n";
    for (const auto& [mu, ov] : r.orbit_counts_stable_from)
        os << "orbit count of type " << mu_to_string(mu) << " settles to " << ov.second
           << " from n=" << ov.first << '\n';
    os << "verdict: " << r.verdict << '\n';
    return os.str();
}

Json action_report_json(const stability::ActionStabilityReport& r) {
    Json j;
    j["family"] = r.family;
    j["window"] = Json::array({r.n_min, r.n_max});
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        Json rj;
        rj["n"] = row.n;
        Json orbits = Json::array();
        for (const auto& o : row.orbits) {
            Json oj;
            oj["label"] = o.label;
            oj["type"] = partition_json(o.type);
            oj["stable_type"] = partition_json(o.stable_type);
            oj["size"] = o.points.size();
            orbits.push_back(std::move(oj));
        }
        rj["orbits"] = std::move(orbits);
        rj["inventory"] = stable_map_json(row.inventory);
        rj["consistent"] = row.consistent;
        rj["injective"] = row.injective;
        rj["surjective"] = row.surjective;
        if (!row.unreached_orbits.empty()) rj["unreached_orbits"] = row.unreached_orbits;
        Json checks = Json::array();
        for (const auto& c : row.closure_checks) {
            Json cj;
            cj["stable_type"] = partition_json(c.stable_type);
            cj["holds"] = c.holds;
            cj["closure_orbits"] = c.closure_orbits;
            cj["target_orbits"] = c.target_orbits;
            checks.push_back(std::move(cj));
        }
        rj["closure_checks"] = std::move(checks);
        rows.push_back(std::move(rj));
    }
    j["per_n"] = std::move(rows);
    Json onsets = Json::array();
    for (const auto& [mu, ov] : r.counts_stable_from) {
        Json e;
        e["stable_type"] = partition_json(mu);
        e["from"] = ov.first;
        e["count"] = ov.second;
        onsets.push_back(std::move(e));
    }
    j["counts_stable_from"] = std::move(onsets);
    j["verdict"] = r.verdict;
    return j;
}

std::string action_report_text(const stability::ActionStabilityReport& r) {
    std::ostringstream os;
    os << "family " << r.family << ", window [" << r.n_min << "," << r.n_max << "]\n";
    for (const auto& row : r.rows) {
        os << "n=" << row.n << ": ";
        bool first = true;
        for (const auto& [mu, c] : row.inventory) {
            if (!first) os << ", ";
            os << "type " << mu_to_string(mu) << " x" << c;
            first = false;
        }
        os << "  [consistent=" << (row.consistent ? "yes" : "NO")
           << " injective=" << (row.injective ? "yes" : "NO")
           << " surjective=" << (row.surjective ? "yes" : "NO") << "]\n";
        for (const auto& o : row.orbits) os << "      orbit " << o.label << '\n';
        for (const auto& u : row.unreached_orbits) os << "      unreached: " << u << '\n';
        for (const auto& c : row.closure_checks) {
            os << "      closure for type " << mu_to_string(c.stable_type) << ": "
               << (c.holds ? "holds" : "FAILS");
            if (!c.holds) {
                os << "; closure covers {";
                for (std::size_t i = 0; i < c.closure_orbits.size(); ++i)
                    os << (i ? ", " : "") << c.closure_orbits[i];
                os << "} but the matching orbits are {";
                for (std::size_t i = 0; i < c.target_orbits.size(); ++i)
                    os << (i ? ", " : "") << c.target_orbits[i];
                os << "}";
            }
            os << '\n';
        }
    }
    for (const auto& [mu, ov] : r.counts_stable_from)
        os << "count of type " << mu_to_string(mu) << " settles to " << ov.second
           << " from n=" << ov.first << '\n';
    os << "verdict: " << r.verdict << '\n';
    return os.str();
}

Json omega_bases_json(const arnold::OmegaBases& b) {
    Json j;
    j["invariant"] = Json::array({subset_vector_json(b.invariant)});
    Json st = Json::array();
    for (const auto& v : b.standard) st.push_back(subset_vector_json(v));
    j["standard"] = std::move(st);
    Json tr = Json::array();
    for (const auto& v : b.two_row) tr.push_back(subset_vector_json(v));
    j["two_row"] = std::move(tr);
    return j;
}

std::string omega_bases_text(const arnold::OmegaBases& b) {
    std::ostringstream os;
    auto wedge_string = [](const SubsetVector& v) {
        // render {i,j} terms as w_ij
        std::ostringstream ws;
        bool first = true;
        for (const auto& [a, c] : v.terms()) {
            if (first) {
                if (c < 0) ws << '-';
            } else {
                ws << (c < 0 ? " - " : " + ");
            }
            Rational abs_c = c < 0 ? Rational(-c) : c;
            if (abs_c != 1) ws << to_string(abs_c) << '*';
            std::vector<int> e = mask_elements(a);
            ws << 'w' << e[0] << ',' << e[1];
            first = false;
        }
        return ws.str();
    };
    os << "invariant line (1 vector):\n  " << wedge_string(b.invariant) << '\n';
    os << "standard component (" << b.standard.size() << " vectors):\n";
    for (const auto& v : b.standard) os << "  " << wedge_string(v) << '\n';
    os << "two-row component (" << b.two_row.size() << " vectors):\n";
    for (const auto& v : b.two_row) os << "  " << wedge_string(v) << '\n';
    return os.str();
}

Json envelope(const std::string& command, Json params, Json result) {
    Json j;
    j["command"] = command;
    j["schema_version"] = kSchemaVersion;
    j["params"] = std::move(params);
    j["result"] = std::move(result);
    return j;
}

}  // namespace symstab::report
