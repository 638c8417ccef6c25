#include "blockseq/morphism.hpp"

#include <deque>
#include <map>
#include <sstream>

namespace blockseq {

UniformMorphism::UniformMorphism(unsigned width, std::vector<std::vector<Letter>> images,
                                 std::vector<Digit> coding, Letter start)
    : width_(width), images_(std::move(images)), coding_(std::move(coding)), start_(start)
{
    if (width_ < 2)
        throw Error("morphism width must be at least 2");
    if (images_.empty() || images_.size() != coding_.size())
        throw Error("morphism needs one image and one code per letter");
    for (const auto& img : images_) {
        if (img.size() != width_)
            throw Error("morphism is not uniform: image of length " +
                        std::to_string(img.size()) + " for width " + std::to_string(width_));
        for (Letter a : img)
            if (a >= images_.size())
                throw Error("image refers to unknown letter " + std::to_string(a));
    }
    for (Digit c : coding_)
        if (c >= width_)
            throw Error("code " + std::to_string(c) + " out of range");
    if (start_ >= images_.size())
        throw Error("unknown start letter");
    if (images_[start_][0] != start_)
        throw Error("start letter is not prolongable");
}

bool UniformMorphism::identity_coding() const noexcept
{
    if (images_.size() != width_)
        return false;
    for (std::size_t a = 0; a < coding_.size(); ++a)
        if (coding_[a] != a)
            return false;
    return true;
}

namespace {

// KMP automaton for w over [[p]]; state |w| is a completed match.
class MatchAutomaton {
public:
    MatchAutomaton(const Word& w, unsigned p) : k_(w.size()), p_(p), delta_((k_ + 1) * p, 0)
    {
        std::vector<std::size_t> fail(k_ + 1, 0);
        for (std::size_t q = 0; q <= k_; ++q) {
            for (unsigned d = 0; d < p; ++d) {
                std::size_t next;
                if (q < k_ && w[q] == d)
                    next = q + 1;
                else
                    next = q == 0 ? 0 : at(fail[q], d);
                delta_[q * p + d] = next;
            }
            if (q >= 1 && q < k_)
                fail[q + 1] = at(fail[q], w[q]);
        }
    }

    std::size_t at(std::size_t q, unsigned d) const { return delta_[q * p_ + d]; }
    bool accepting(std::size_t q) const { return q == k_; }

private:
    std::size_t k_;
    unsigned p_;
    std::vector<std::size_t> delta_;
};

// Evaluates n -> a(p^e n + r) without forming the integer: for n >= 1 the
// expansion is [n]_p followed by the e digits of r.
class FingerprintSource {
public:
    FingerprintSource(const PatternSpec& spec, std::size_t limit)
        : spec_(spec), automaton_(spec.pattern(), spec.base()), state_(limit), count_(limit)
    {
        const unsigned p = spec.base();
        // Index 0 stands for the empty prefix here, not for [0]_p.
        for (std::size_t n = 1; n < limit; ++n) {
            const std::size_t q = automaton_.at(state_[n / p], static_cast<unsigned>(n % p));
            state_[n] = q;
            count_[n] = count_[n / p] + (automaton_.accepting(q) ? 1 : 0);
        }
    }

    std::vector<Digit> fingerprint(const Word& residue, std::size_t len) const
    {
        const unsigned p = spec_.base();
        std::vector<Digit> out(len);
        if (len == 0)
            return out;
        out[0] = value_at_zero(residue);
        for (std::size_t n = 1; n < len; ++n) {
            std::size_t q = state_[n];
            std::size_t c = count_[n];
            for (Digit d : residue.digits()) {
                q = automaton_.at(q, d);
                if (automaton_.accepting(q))
                    ++c;
            }
            out[n] = static_cast<Digit>(c % p);
        }
        return out;
    }

private:
    // a(r): the residue with its padding zeros stripped, or "0" when r = 0.
    Digit value_at_zero(const Word& residue) const
    {
        const auto d = residue.digits();
        std::size_t lead = 0;
        while (lead + 1 < d.size() && d[lead] == 0)
            ++lead;
        Word canonical = d.empty() ? Word(spec_.base(), {0}) : residue.slice(lead, d.size() - lead);
        return static_cast<Digit>(count_occurrences(canonical, spec_.pattern()) % spec_.base());
    }

    const PatternSpec& spec_;
    MatchAutomaton automaton_;
    std::vector<std::size_t> state_;
    std::vector<std::size_t> count_;
};

Word child_residue(const Word& residue, Digit j)
{
    Word out(residue.base(), std::vector<Digit>{j});
    out.append(residue);
    return out;
}

} // namespace

std::size_t default_fingerprint_len(const PatternSpec& spec)
{
    return 4 * ipow(spec.base(), static_cast<unsigned>(spec.length() + 2));
}

Kernel infer_kernel(const PatternSpec& spec, std::size_t fingerprint_len)
{
    require_prime(spec);
    if (fingerprint_len == 0)
        throw Error("fingerprint length must be positive");
    const unsigned p = spec.base();
    const std::size_t bound = ipow(p, static_cast<unsigned>(spec.length() + 3));
    const FingerprintSource source(spec, 2 * fingerprint_len);

    Kernel kernel;
    kernel.fingerprint_len = fingerprint_len;
    std::map<std::vector<Digit>, Letter> index;

    KernelElement root{0, Word(p), source.fingerprint(Word(p), fingerprint_len)};
    index.emplace(root.fingerprint, 0);
    kernel.elements.push_back(std::move(root));

    std::deque<Letter> queue{0};
    while (!queue.empty()) {
        const Letter k = queue.front();
        queue.pop_front();
        std::vector<Letter> kids(p);
        const unsigned exponent = kernel.elements[k].exponent;
        const Word parent_residue = kernel.elements[k].residue;
        for (unsigned j = 0; j < p; ++j) {
            Word residue = child_residue(parent_residue, static_cast<Digit>(j));
            auto fp = source.fingerprint(residue, fingerprint_len);
            auto it = index.find(fp);
            if (it != index.end()) {
                kids[j] = it->second;
                continue;
            }
            if (kernel.elements.size() >= bound)
                throw KernelOverflow("kernel of " + spec.str() + " exceeded " +
                                     std::to_string(bound) + " elements at fingerprint length " +
                                     std::to_string(fingerprint_len));
            const auto id = static_cast<Letter>(kernel.elements.size());
            index.emplace(fp, id);
            kernel.elements.push_back({exponent + 1, std::move(residue), std::move(fp)});
            kids[j] = id;
            queue.push_back(id);
        }
        if (kernel.children.size() <= k)
            kernel.children.resize(k + 1);
        kernel.children[k] = std::move(kids);
    }

    // Every identification made at length L must survive at 2L.
    std::vector<std::vector<Digit>> wide;
    wide.reserve(kernel.elements.size());
    for (const auto& e : kernel.elements)
        wide.push_back(source.fingerprint(e.residue, 2 * fingerprint_len));
    for (std::size_t k = 0; k < kernel.elements.size(); ++k) {
        for (unsigned j = 0; j < p; ++j) {
            const Word residue =
                child_residue(kernel.elements[k].residue, static_cast<Digit>(j));
            if (source.fingerprint(residue, 2 * fingerprint_len) != wide[kernel.children[k][j]])
                throw KernelMismatch("kernel identification of " + spec.str() +
                                     " does not hold at fingerprint length " +
                                     std::to_string(2 * fingerprint_len));
        }
    }
    return kernel;
}

Kernel infer_kernel(const PatternSpec& spec)
{
    return infer_kernel(spec, default_fingerprint_len(spec));
}

UniformMorphism build_morphism(const Kernel& kernel, unsigned p)
{
    // The kernel transitions K -> K_j read the digits of n least significant
    // first. A letter here is a map g from kernel elements to digits, with
    // g_u(K) = code of the element reached from K by reading u reversed. Then
    // g_{uj} = g_u o (K -> K_j), g_u(root) = a((u)_p), and g_0 = g_empty, so
    // the start letter is prolongable.
    const std::size_t q = kernel.elements.size();
    const std::size_t bound = q * ipow(p, 3);
    using Map = std::vector<Digit>;

    Map start(q);
    for (std::size_t k = 0; k < q; ++k)
        start[k] = kernel.elements[k].fingerprint.at(0);

    std::map<Map, Letter> index{{start, 0}};
    std::vector<Map> letters{start};
    std::vector<std::vector<Letter>> images;
    for (std::size_t a = 0; a < letters.size(); ++a) {
        std::vector<Letter> img(p);
        for (unsigned j = 0; j < p; ++j) {
            Map next(q);
            for (std::size_t k = 0; k < q; ++k)
                next[k] = letters[a][kernel.children[k][j]];
            auto [it, inserted] = index.emplace(next, static_cast<Letter>(letters.size()));
            if (inserted) {
                if (letters.size() >= bound)
                    throw KernelOverflow("morphism alphabet exceeded " + std::to_string(bound) +
                                         " letters");
                letters.push_back(std::move(next));
            }
            img[j] = it->second;
        }
        images.push_back(std::move(img));
    }

    std::vector<Digit> coding;
    coding.reserve(letters.size());
    for (const auto& g : letters)
        coding.push_back(g[0]);
    return UniformMorphism(p, std::move(images), std::move(coding), 0);
}

UniformMorphism build_morphism(const PatternSpec& spec)
{
    return build_morphism(infer_kernel(spec), spec.base());
}

UniformMorphism pure_single_letter_morphism(unsigned p, Digit x)
{
    require_base(p);
    if (!is_prime(p))
        throw InvalidBase("pure single-letter morphism needs a prime width");
    if (x == 0 || x >= p)
        throw InvalidPattern("pure single-letter morphism needs 1 <= x <= p-1");
    std::vector<std::vector<Letter>> images(p, std::vector<Letter>(p));
    std::vector<Digit> coding(p);
    for (unsigned i = 0; i < p; ++i) {
        for (unsigned k = 0; k < p; ++k)
            images[i][k] = k == x ? (i + 1) % p : i;
        coding[i] = static_cast<Digit>(i);
    }
    return UniformMorphism(p, std::move(images), std::move(coding), 0);
}

Word expand_fixed_point(const UniformMorphism& mu, std::size_t n_terms)
{
    // Letter at n is image(letter at n / p)[n % p]; position 0 holds the start
    // letter because its image begins with itself.
    const unsigned p = mu.width();
    std::vector<Letter> letters(n_terms);
    std::vector<Digit> out(n_terms);
    for (std::size_t n = 0; n < n_terms; ++n) {
        letters[n] = n == 0 ? mu.start() : mu.image(letters[n / p])[n % p];
        out[n] = mu.code(letters[n]);
    }
    return Word(p, std::move(out));
}

std::string export_morphism(const UniformMorphism& mu)
{
    std::ostringstream os;
    os << "width=" << mu.width() << " start=" << mu.start() << '\n';
    for (Letter a = 0; a < mu.alphabet_size(); ++a) {
        os << a << " ->";
        for (Letter b : mu.image(a))
            os << ' ' << b;
        os << " ; code=" << static_cast<unsigned>(mu.code(a)) << '\n';
    }
    return os.str();
}

namespace {

unsigned long parse_number(const std::string& token, std::size_t line)
{
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(line, "expected a non-negative integer, got '" + token + "'");
    return std::stoul(token);
}

std::string strip_prefix(const std::string& token, const std::string& key, std::size_t line)
{
    if (token.rfind(key, 0) != 0)
        throw ParseError(line, "expected '" + key + "...', got '" + token + "'");
    return token.substr(key.size());
}

} // namespace

UniformMorphism parse_morphism(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;

    if (!std::getline(in, line))
        throw ParseError(1, "missing header");
    ++line_no;
    std::istringstream header(line);
    std::string width_tok, start_tok, extra;
    if (!(header >> width_tok >> start_tok) || (header >> extra))
        throw ParseError(line_no, "header must be 'width=P start=LETTER'");
    const auto width = static_cast<unsigned>(parse_number(strip_prefix(width_tok, "width=", line_no), line_no));
    const auto start = static_cast<Letter>(parse_number(strip_prefix(start_tok, "start=", line_no), line_no));

    std::vector<std::vector<Letter>> images;
    std::vector<Digit> coding;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty())
            continue;
        std::istringstream row(line);
        std::string tok;
        row >> tok;
        if (parse_number(tok, line_no) != images.size())
            throw ParseError(line_no, "letters must be listed in order starting at 0");
        if (!(row >> tok) || tok != "->")
            throw ParseError(line_no, "expected '->'");
        std::vector<Letter> img;
        while (row >> tok && tok != ";")
            img.push_back(static_cast<Letter>(parse_number(tok, line_no)));
        if (tok != ";" || !(row >> tok))
            throw ParseError(line_no, "expected '; code=DIGIT'");
        const auto code = parse_number(strip_prefix(tok, "code=", line_no), line_no);
        if (code > 255)
            throw ParseError(line_no, "code out of range");
        images.push_back(std::move(img));
        coding.push_back(static_cast<Digit>(code));
    }
    try {
        return UniformMorphism(width, std::move(images), std::move(coding), start);
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(line_no, e.what());
    }
}

} // namespace blockseq
