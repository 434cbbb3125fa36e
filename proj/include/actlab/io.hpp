#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include <actlab/act.hpp>

namespace actlab {

/// The document is not valid JSON or does not follow the file schema.
/// Table-level problems (range, axioms) are reported as actlab::Error instead.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class FileNotFound : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// {"name"?, "order", "identity", "table"}
nlohmann::json to_json(const FiniteMonoid & S);
FiniteMonoid monoid_from_json(const nlohmann::json & j);

/// {"name"?, "monoid", "size", "action"}; the monoid is written inline.
nlohmann::json to_json(const FiniteAct & A);

/// "monoid" may be an inline object or a path, resolved against `base_dir`.
FiniteAct act_from_json(const nlohmann::json & j, const std::filesystem::path & base_dir = {});

template <class Tag>
nlohmann::json to_json(const Subset<Tag> & X)
{
    return X.elements();
}

nlohmann::json parse_json_file(const std::filesystem::path & path);
FiniteMonoid load_monoid(const std::filesystem::path & path);
FiniteAct load_act(const std::filesystem::path & path);
void write_json_file(const std::filesystem::path & path, const nlohmann::json & j);

} // namespace actlab
