#include "blockseq/fixture.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace blockseq {

std::string format_series_dump(unsigned base, const std::string& pattern, const Word& digits)
{
    return "p=" + std::to_string(base) + " w=" + pattern + " N=" +
           std::to_string(digits.size()) + "\n" + digits.str() + "\n";
}

namespace {

std::string header_value(const std::string& token, const std::string& key)
{
    if (token.rfind(key, 0) != 0 || token.size() == key.size())
        throw ParseError(1, "expected '" + key + "<value>', got '" + token + "'");
    return token.substr(key.size());
}

std::size_t parse_count(const std::string& s, std::size_t line)
{
    if (s.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(line, "not a count: '" + s + "'");
    return std::stoull(s);
}

} // namespace

Fixture parse_fixture(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line.empty())
        throw ParseError(1, "missing header");
    if (!line.empty() && line.back() == '\r')
        line.pop_back();

    std::istringstream header(line);
    std::string p_tok, w_tok, n_tok, off_tok, extra;
    if (!(header >> p_tok >> w_tok >> n_tok) || ((header >> off_tok) && (header >> extra)))
        throw ParseError(1, "header must be 'p=<base> w=<pattern> N=<count> [offset=<n>]'");

    Fixture fx;
    fx.base = static_cast<unsigned>(parse_count(header_value(p_tok, "p="), 1));
    fx.pattern = header_value(w_tok, "w=");
    const std::size_t count = parse_count(header_value(n_tok, "N="), 1);
    if (!off_tok.empty())
        fx.offset = parse_count(header_value(off_tok, "offset="), 1);
    try {
        PatternSpec check(fx.base, fx.pattern);
    } catch (const Error& e) {
        throw ParseError(1, e.what());
    }

    std::string body;
    std::size_t line_no = 1;
    std::size_t body_line = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        if (body_line != 0)
            throw ParseError(line_no, "digits must be on a single line");
        body_line = line_no;
        body = line;
    }
    if (body.empty())
        throw ParseError(line_no + 1, "empty digit body");
    try {
        fx.digits = Word::parse(body, fx.base);
    } catch (const Error& e) {
        throw ParseError(body_line, e.what());
    }
    if (fx.digits.size() != count)
        throw ParseError(body_line, "header announces " + std::to_string(count) +
                                        " digits, body has " +
                                        std::to_string(fx.digits.size()));
    return fx;
}

Fixture load_fixture(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot read fixture " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_fixture(ss.str());
}

std::filesystem::path fixture_dir()
{
    if (const char* env = std::getenv("BLOCKSEQ_FIXTURES"); env && *env)
        return env;
    return BLOCKSEQ_DEFAULT_FIXTURE_DIR;
}

std::vector<std::pair<std::filesystem::path, Fixture>>
find_fixtures(const std::filesystem::path& dir, const PatternSpec& spec)
{
    std::vector<std::pair<std::filesystem::path, Fixture>> out;
    std::error_code ec;
    if (!std::filesystem::is_directory(dir, ec))
        return out;
    for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
        if (!entry.is_regular_file() || entry.path().extension() != ".txt")
            continue;
        Fixture fx = load_fixture(entry.path());
        if (fx.base == spec.base() && fx.pattern == spec.pattern().str())
            out.emplace_back(entry.path(), std::move(fx));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

} // namespace blockseq
