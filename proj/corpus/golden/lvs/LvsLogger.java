package lvs;

public class LvsLogger {
    private int m_iDepth;

    public LvsLogger() {
        m_iDepth = 0;
    }

    public void enter() {
        m_iDepth++;
    }
}
