package wem;

import base.chain.ChainMgm;
import base.chain.Link;
import wem.te.WemTeDAO;

public class WemDaoStep implements Link {
    protected WemTeDAO m_oDAO;
    private int m_iLimit;

    public WemDaoStep(int w) {
        m_oDAO = new WemTeDAO();
        m_iLimit = w;
    }

    public String getName() {
        return "WemDaoStep";
    }

    public void run(ChainMgm ChainMgm) {
        if (m_oDAO.getWeight() > m_iLimit) {
            m_oDAO.setWeight(m_iLimit);
        }
        ChainMgm.runNext();
    }
}
