#include <string>

class StringOps {
public:
    char lastChar(std::string str) {
        char last_char;
        last_char = str[str.size() - 1];
        return last_char;
    }

    int where(std::string s, std::string t, size_t n) { return s.find(t, n); }

    int whereChar(std::string s, char c, int n) { return s.find(c, n); }

    bool same(std::string a, std::string b) { return a == b; }

    bool isEmpty(std::string s) { return s.empty(); }
};
