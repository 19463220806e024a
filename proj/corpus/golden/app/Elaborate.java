package app;

public class Elaborate extends Base {
    public int weigh() {
        return m_oDAO.getDAOMember() * 2 + helper();
    }

    public void reset() {
        m_oDAO.setDAOMember(0);
    }
}
