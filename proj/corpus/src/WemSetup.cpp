#include <iostream>

class WemSetup {
public:
    WemSetup(int n) : m_iSize(n) {
        std::cout << "setup " << n << std::endl;
        m_iReady = 1;
    }

    int size() { return m_iSize; }

private:
    int m_iSize;
    int m_iReady;
};
