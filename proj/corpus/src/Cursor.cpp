#include <string>

// @resource
class Cursor {
public:
    Cursor(std::string query) : m_sQuery(query), m_iPos(0) {}

    ~Cursor() { m_iPos = -1; }

    bool next() {
        m_iPos++;
        return m_iPos < 3;
    }

    int value() { return m_iPos; }

private:
    std::string m_sQuery;
    int m_iPos;
};
