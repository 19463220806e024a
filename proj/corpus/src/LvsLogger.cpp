#include <iostream>

class LvsLogger {
public:
    LvsLogger() : m_iDepth(0) {}

    ~LvsLogger() { std::cout << "leave " << m_iDepth << std::endl; }

    void enter() { m_iDepth++; }

private:
    int m_iDepth;
};
