#ifndef YBHOM_IO_HPP
#define YBHOM_IO_HPP

#include <string>
#include <variant>

#include <json.hpp>

#include "ybhom/extensions.hpp"
#include "ybhom/structures.hpp"

namespace ybhom {

using Json = nlohmann::json;

Json to_json(const BraidedSet& B);
Json to_json(const CycleSet& C);
Json to_json(const Shelf& S);
Json to_json(const Cochain2& f);
Json module_to_json(const Table& action, bool right_module);

/// A module file parsed without its braided-set context.
struct RawModule {
    bool right = true;
    int carrier = 0;
    Table action;
};

using StructureVariant = std::variant<BraidedSet, CycleSet, Shelf, RawModule, Cochain2>;

StructureVariant parse_structure(const Json& j);
Json read_json_file(const std::string& path);

}  // namespace ybhom

#endif
