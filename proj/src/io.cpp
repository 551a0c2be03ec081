#include "ybhom/io.hpp"

#include <fstream>

namespace ybhom {

namespace {

Json rows_json(const Table& t) {
    Json out = Json::array();
    for (const auto& row : t.to_rows()) out.push_back(row);
    return out;
}

Table table_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("expected an array of rows");
    std::vector<std::vector<int>> rows;
    for (const auto& r : j) rows.push_back(r.get<std::vector<int>>());
    return Table::from_rows(rows);
}

}  // namespace

Json to_json(const BraidedSet& B) {
    return Json{{"kind", "braided_set"},
                {"size", B.n},
                {"left", rows_json(B.left)},
                {"right", rows_json(B.right)}};
}

Json to_json(const CycleSet& C) {
    return Json{{"kind", "cycle_set"}, {"size", C.n}, {"table", rows_json(C.dot)}};
}

Json to_json(const Shelf& S) {
    return Json{{"kind", "shelf"}, {"size", S.n}, {"table", rows_json(S.op)}};
}

Json to_json(const Cochain2& f) {
    return Json{{"kind", "cochain2"},
                {"base", f.base},
                {"moduli", f.group.moduli},
                {"values", rows_json(f.values)}};
}

Json module_to_json(const Table& action, bool right_module) {
    return Json{{"kind", right_module ? "right_module" : "left_module"},
                {"carrier", right_module ? action.rows() : action.cols()},
                {"action", rows_json(action)}};
}

StructureVariant parse_structure(const Json& j) {
    if (!j.is_object() || !j.contains("kind")) throw ParseError("missing \"kind\"");
    const std::string kind = j.at("kind").get<std::string>();
    try {
        if (kind == "braided_set") {
            Table left = table_from_json(j.at("left"));
            Table right = table_from_json(j.at("right"));
            if (j.contains("size") && j.at("size").get<int>() != left.rows())
                throw ParseError("size field disagrees with the tables");
            return validate_braided_set(left, right);
        }
        if (kind == "cycle_set") {
            Table t = table_from_json(j.at("table"));
            if (j.contains("size") && j.at("size").get<int>() != t.rows())
                throw ParseError("size field disagrees with the table");
            return validate_cycle_set(t);
        }
        if (kind == "shelf") {
            Table t = table_from_json(j.at("table"));
            if (j.contains("size") && j.at("size").get<int>() != t.rows())
                throw ParseError("size field disagrees with the table");
            return validate_shelf(t);
        }
        if (kind == "right_module" || kind == "left_module") {
            RawModule m;
            m.right = (kind == "right_module");
            m.action = table_from_json(j.at("action"));
            m.carrier = j.contains("carrier") ? j.at("carrier").get<int>()
                                              : (m.right ? m.action.rows() : m.action.cols());
            return m;
        }
        if (kind == "cochain2") {
            FiniteAbelianGroup A = make_group(j.at("moduli").get<std::vector<long>>());
            Table values = table_from_json(j.at("values"));
            int base = j.contains("base") ? j.at("base").get<int>() : values.rows();
            return make_cochain(base, A, values);
        }
    } catch (const Json::exception& e) {
        throw ParseError(e.what());
    }
    throw ParseError("unknown kind \"" + kind + "\"");
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("invalid JSON in ") + path + ": " + e.what());
    }
    return j;
}

}  // namespace ybhom
