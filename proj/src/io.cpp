#include <actlab/io.hpp>

#include <fstream>
#include <sstream>

namespace actlab {

using nlohmann::json;

namespace {

    const json & require(const json & j, const char * key)
    {
        if (! j.is_object())
            throw ParseError("expected a JSON object");
        auto it = j.find(key);
        if (it == j.end())
            throw ParseError(std::string("missing field '") + key + "'");
        return *it;
    }

    std::size_t read_count(const json & j, const char * key)
    {
        const auto & v = require(j, key);
        if (! v.is_number_integer() || v.get<long long>() < 1)
            throw ParseError(std::string("field '") + key + "' must be a positive integer");
        return v.get<std::size_t>();
    }

    // Entries must be integers; negative or too-large values are range
    // violations and are reported with the validation taxonomy.
    Table read_table(const json & j, const char * key, std::size_t rows, std::size_t range)
    {
        const auto & t = require(j, key);
        if (! t.is_array())
            throw ParseError(std::string("field '") + key + "' must be an array of rows");
        if (t.size() != rows)
            throw Error(ErrorKind::Malformed, std::string("field '") + key + "' has " + std::to_string(t.size())
                    + " rows, expected " + std::to_string(rows));
        Table out(rows);
        for (std::size_t r = 0; r < rows; ++r) {
            if (! t[r].is_array())
                throw ParseError("row " + std::to_string(r) + " is not an array");
            for (std::size_t c = 0; c < t[r].size(); ++c) {
                const auto & v = t[r][c];
                if (! v.is_number_integer())
                    throw ParseError("entry (" + std::to_string(r) + ", " + std::to_string(c) + ") is not an integer");
                auto x = v.get<long long>();
                if (x < 0 || static_cast<unsigned long long>(x) >= range)
                    throw Error(ErrorKind::OutOfRangeEntry, "entry (" + std::to_string(r) + ", " + std::to_string(c)
                            + ") = " + std::to_string(x) + " is out of range",
                        {static_cast<Element>(r), static_cast<Element>(c)});
                out[r].push_back(static_cast<Element>(x));
            }
        }
        return out;
    }

    std::string read_name(const json & j)
    {
        auto it = j.find("name");
        if (it == j.end() || it->is_null())
            return {};
        if (! it->is_string())
            throw ParseError("field 'name' must be a string");
        return it->get<std::string>();
    }

} // namespace

json to_json(const FiniteMonoid & S)
{
    json j;
    if (! S.name().empty())
        j["name"] = S.name();
    j["order"] = S.order();
    j["identity"] = S.identity();
    j["table"] = S.rows();
    return j;
}

FiniteMonoid monoid_from_json(const json & j)
{
    auto n = read_count(j, "order");
    std::optional<Element> identity;
    if (j.contains("identity")) {
        const auto & id = j["identity"];
        if (! id.is_number_integer())
            throw ParseError("field 'identity' must be an integer");
        auto x = id.get<long long>();
        if (x < 0 || static_cast<std::size_t>(x) >= n)
            throw Error(ErrorKind::NoIdentity, "declared identity " + std::to_string(x) + " is out of range");
        identity = static_cast<Element>(x);
    }
    auto rows = read_table(j, "table", n, n);
    return FiniteMonoid::from_table(rows, identity, read_name(j));
}

json to_json(const FiniteAct & A)
{
    json j;
    if (! A.name().empty())
        j["name"] = A.name();
    j["monoid"] = to_json(A.monoid());
    j["size"] = A.size();
    j["action"] = A.rows();
    return j;
}

FiniteAct act_from_json(const json & j, const std::filesystem::path & base_dir)
{
    const auto & m = require(j, "monoid");
    MonoidPtr host;
    if (m.is_object())
        host = std::make_shared<const FiniteMonoid>(monoid_from_json(m));
    else if (m.is_string())
        host = std::make_shared<const FiniteMonoid>(load_monoid(base_dir / m.get<std::string>()));
    else
        throw ParseError("field 'monoid' must be an object or a path");
    auto size = read_count(j, "size");
    auto rows = read_table(j, "action", size, size);
    return FiniteAct::from_table(std::move(host), rows, read_name(j));
}

json parse_json_file(const std::filesystem::path & path)
{
    std::ifstream in(path);
    if (! in)
        throw FileNotFound("cannot open " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return json::parse(buffer.str());
    }
    catch (const json::parse_error & e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

FiniteMonoid load_monoid(const std::filesystem::path & path)
{
    return monoid_from_json(parse_json_file(path));
}

FiniteAct load_act(const std::filesystem::path & path)
{
    return act_from_json(parse_json_file(path), path.parent_path());
}

void write_json_file(const std::filesystem::path & path, const json & j)
{
    std::ofstream out(path);
    if (! out)
        throw FileNotFound("cannot write " + path.string());
    out << j.dump(2) << '\n';
}

} // namespace actlab
