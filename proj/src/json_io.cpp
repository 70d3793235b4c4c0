#include "qderange/json_io.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "qderange/errors.hpp"
#include "qderange/sign.hpp"

namespace qderange {

json to_json(const IntPoly& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
    return arr;
}

IntPoly intpoly_from_json(const json& j) {
    if (!j.is_array()) throw PreconditionViolation("IntPoly json: expected array");
    std::vector<mpz_class> coeffs;
    coeffs.reserve(j.size());
    for (const auto& e : j) {
        if (e.is_string())
            coeffs.emplace_back(e.get<std::string>());
        else if (e.is_number_integer())
            coeffs.emplace_back(static_cast<long>(e.get<long long>()));
        else
            throw PreconditionViolation("IntPoly json: coefficient must be string or integer");
    }
    return IntPoly(std::move(coeffs));
}

json to_json(const RatFunc& f) {
    if (f.is_polynomial()) return to_json(f.num());
    return json{{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

RatFunc ratfunc_from_json(const json& j) {
    if (j.is_array()) return RatFunc(intpoly_from_json(j));
    if (j.is_object() && j.contains("num") && j.contains("den"))
        return RatFunc(intpoly_from_json(j.at("num")), intpoly_from_json(j.at("den")));
    throw PreconditionViolation("RatFunc json: expected array or {num, den}");
}

json to_json(const Partition& p) {
    json arr = json::array();
    for (int x : p.parts()) arr.push_back(x);
    return arr;
}

Partition partition_from_json(const json& j) {
    if (!j.is_array()) throw PreconditionViolation("Partition json: expected array");
    std::vector<int> parts;
    for (const auto& e : j) parts.push_back(e.get<int>());
    return Partition(std::move(parts));
}

json to_json(const BlockVector& v) {
    json coeffs = json::array();
    for (const auto& [lam, c] : v.coeffs())
        coeffs.push_back(json{{"partition", to_json(lam)}, {"value", to_json(c)}});
    return json{{"n", v.level()}, {"coeffs", coeffs}};
}

BlockVector blockvector_from_json(const json& j) {
    BlockVector v(j.at("n").get<int>());
    for (const auto& e : j.at("coeffs"))
        v.set(partition_from_json(e.at("partition")), ratfunc_from_json(e.at("value")));
    return v;
}

json to_json(const PsiCoeffs& f) {
    json coeffs = json::array();
    for (const auto& c : f.coeffs) coeffs.push_back(to_json(c));
    return json{{"n", f.n}, {"coeffs", coeffs}};
}

PsiCoeffs psicoeffs_from_json(const json& j) {
    PsiCoeffs f(j.at("n").get<int>());
    const auto& arr = j.at("coeffs");
    if (static_cast<int>(arr.size()) != f.n + 1)
        throw PreconditionViolation("PsiCoeffs json: wrong length");
    for (int k = 0; k <= f.n; ++k) f[k] = ratfunc_from_json(arr[static_cast<size_t>(k)]);
    return f;
}

json to_json(const CoeffTable& t) {
    json rows = json::array();
    for (size_t i = 0; i < t.rows.size(); ++i) {
        json coeffs = json::array();
        for (const auto& e : t.entries[i]) coeffs.push_back(to_json(e));
        rows.push_back(json{{"partition", to_json(t.rows[i])}, {"coeffs", coeffs}});
    }
    return json{{"n", t.n}, {"basis", t.basis}, {"rows", rows}};
}

CoeffTable table_from_json(const json& j) {
    CoeffTable t;
    t.n = j.at("n").get<int>();
    t.basis = j.at("basis").get<std::string>();
    for (const auto& row : j.at("rows")) {
        t.rows.push_back(partition_from_json(row.at("partition")));
        std::vector<RatFunc> entries;
        for (const auto& e : row.at("coeffs")) entries.push_back(ratfunc_from_json(e));
        t.entries.push_back(std::move(entries));
    }
    return t;
}

std::string to_csv(const CoeffTable& t) {
    std::ostringstream os;
    os << "partition";
    for (int k = 0; k <= t.n; ++k) os << "," << t.basis << "_" << k;
    os << "\n";
    for (size_t i = 0; i < t.rows.size(); ++i) {
        os << "\"" << to_json(t.rows[i]).dump() << "\"";
        for (const auto& e : t.entries[i]) os << ",\"" << e.str() << "\"";
        os << "\n";
    }
    return os.str();
}

std::string to_pretty(const CoeffTable& t) {
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> head{"lambda"};
    for (int k = 0; k <= t.n; ++k) head.push_back(t.basis + "_" + std::to_string(k));
    cells.push_back(head);
    for (size_t i = 0; i < t.rows.size(); ++i) {
        std::vector<std::string> row{t.rows[i].str_compact()};
        for (const auto& e : t.entries[i]) row.push_back(e.str());
        cells.push_back(std::move(row));
    }
    std::vector<size_t> width(cells[0].size(), 0);
    for (const auto& row : cells)
        for (size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    std::ostringstream os;
    for (const auto& row : cells) {
        for (size_t c = 0; c < row.size(); ++c)
            os << std::left << std::setw(static_cast<int>(width[c]) + 2) << row[c];
        os << "\n";
    }
    return os.str();
}

json to_json(const ConeReport& r) {
    json extremes = json::array();
    for (const auto& e : r.extremes) extremes.push_back(to_json(e));
    json eig = json::object();
    for (size_t i = 0; i < r.eigendiagram_of.size(); ++i) {
        const std::string key = std::to_string(i);
        if (r.eigendiagram_of[i])
            eig[key] = to_json(*r.eigendiagram_of[i]);
        else
            eig[key] = nullptr;
    }
    json notes = json::array();
    for (const auto& s : r.notes) notes.push_back(s);
    if (!r.complete) notes.push_back("report incomplete: budget exhausted");
    return json{{"n", r.n},
                {"simplicial", r.simplicial},
                {"extremes", extremes},
                {"eigendiagrams", eig},
                {"notes", notes}};
}

std::string sign_pattern_table(const ConeReport& r) {
    std::vector<Partition> rows = partitions_of(r.n);
    rows.push_back(Partition());
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> head{"sign"};
    for (size_t i = 0; i < r.extremes.size(); ++i) {
        if (i <= static_cast<size_t>(r.n)) {
            head.push_back("tau_" + std::to_string(i));
        } else {
            const size_t extra = i - static_cast<size_t>(r.n);
            head.push_back(extra == 1 ? "tau_*" : "tau_*" + std::to_string(extra));
        }
    }
    cells.push_back(head);
    for (const auto& lam : rows) {
        std::vector<std::string> row{lam.str_compact()};
        for (const auto& f : r.extremes) {
            const RatFunc& c = f.coeff(lam);
            row.push_back(c.is_zero() ? "0" : "+");
        }
        cells.push_back(std::move(row));
    }
    std::vector<size_t> width(cells[0].size(), 0);
    for (const auto& row : cells)
        for (size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    std::ostringstream os;
    for (const auto& row : cells) {
        for (size_t c = 0; c < row.size(); ++c)
            os << std::left << std::setw(static_cast<int>(width[c]) + 2) << row[c];
        os << "\n";
    }
    return os.str();
}

std::string to_pretty(const ConeReport& r) {
    std::ostringstream os;
    os << "cone D_" << r.n << "^+: " << (r.simplicial ? "simplicial" : "not simplicial") << ", "
       << r.extremes.size() << " extreme rays" << (r.complete ? "" : " (incomplete)") << "\n\n";
    os << "eigendiagrams (tau basis):\n";
    for (size_t i = 0; i < r.eigendiagram_of.size() && i <= static_cast<size_t>(r.n); ++i) {
        os << "  tau_" << i << ": ";
        os << (r.eigendiagram_of[i] ? r.eigendiagram_of[i]->str_compact() : std::string("none"));
        os << "\n";
    }
    os << "\nsign pattern on full-degree diagrams and the empty diagram:\n"
       << sign_pattern_table(r);
    if (!r.notes.empty()) {
        os << "\nnotes:\n";
        for (const auto& s : r.notes) os << "  - " << s << "\n";
    }
    return os.str();
}

} // namespace qderange
