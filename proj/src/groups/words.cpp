#include "ggt/groups/words.hpp"

#include <algorithm>

namespace ggt {

FreeWord FreeWord::from_letters(const std::vector<int>& letters) {
    FreeWord w;
    for (int s : letters) {
        if (s == 0) throw validation_error("free word letter cannot be 0");
        if (!w.letters_.empty() && w.letters_.back() == -s)
            w.letters_.pop_back();
        else
            w.letters_.push_back(s);
    }
    return w;
}

FreeWord FreeWord::parse(const std::string& text) {
    std::vector<int> letters;
    for (char c : text) {
        if (c == 'e' && text.size() == 1) break;  // identity literal
        if (c >= 'a' && c <= 'z')
            letters.push_back(c - 'a' + 1);
        else if (c >= 'A' && c <= 'Z')
            letters.push_back(-(c - 'A' + 1));
        else if (c == ' ')
            continue;
        else
            throw validation_error(std::string("bad free-word character: ") + c);
    }
    return from_letters(letters);
}

int FreeWord::max_generator() const {
    int m = 0;
    for (int s : letters_) m = std::max(m, std::abs(s));
    return m;
}

FreeWord FreeWord::operator*(const FreeWord& o) const {
    FreeWord r = *this;
    for (int s : o.letters_) {
        if (!r.letters_.empty() && r.letters_.back() == -s)
            r.letters_.pop_back();
        else
            r.letters_.push_back(s);
    }
    return r;
}

FreeWord FreeWord::inverse() const {
    FreeWord r;
    r.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.letters_.push_back(-*it);
    return r;
}

std::string FreeWord::str() const {
    if (letters_.empty()) return "e";
    std::string s;
    for (int l : letters_) {
        if (l > 0)
            s.push_back(static_cast<char>('a' + l - 1));
        else
            s.push_back(static_cast<char>('A' - l - 1));
    }
    return s;
}

std::size_t cancellation_length(const FreeWord& a, const FreeWord& b) {
    std::size_t k = 0;
    while (k < a.length() && k < b.length() &&
           a.letters()[a.length() - 1 - k] == -b.letters()[k])
        ++k;
    return k;
}

bool same_axis(const FreeWord& f, const FreeWord& g) {
    if (f.is_identity() || g.is_identity())
        throw validation_error("same_axis requires nontrivial words");
    return f * g == g * f;
}

}  // namespace ggt
