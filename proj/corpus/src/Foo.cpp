#include <string>

class Foo {
public:
    Foo() : m_iValue(7) {}

    int getFooValue() { return m_iValue; }

    std::string describe() { return "foo"; }

private:
    int m_iValue;
};
