package wem.te;

import app.DbRecord;

public class WemTeDAO extends DbRecord {
    private int m_iWeight;

    public int getWeight() {
        return m_iWeight;
    }

    public void setWeight(int w) {
        m_iWeight = w;
    }
}
