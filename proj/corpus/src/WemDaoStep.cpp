#include "Chain.h"
#include "WemTeDAO.h"

class WemDaoStep : public Chain, public WemTeDAO {
public:
    WemDaoStep(int w) : Chain(), WemTeDAO() { m_iLimit = w; }

    std::string getName() { return "WemDaoStep"; }

    virtual void run() {
        if (getWeight() > m_iLimit) {
            setWeight(m_iLimit);
        }
        Chain::run();
    }

private:
    int m_iLimit;
};
