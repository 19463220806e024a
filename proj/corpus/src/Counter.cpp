#include <map>
#include <string>
#include <vector>

class Counter {
public:
    void add(int v) { m_aValues.push_back(v); }

    int first() { return m_aValues[0]; }

    int size() { return m_aValues.size(); }

    void remember(std::string key, int v) { m_oSeen[key] = v; }

    int seen(std::string key) { return m_oSeen[key]; }

private:
    std::vector<int> m_aValues;
    std::map<std::string, int> m_oSeen;
};
