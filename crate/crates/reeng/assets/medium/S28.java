public class S28 extends State {
    public void open() {
        send("msg1");
    }

    public void close() {
        if (counter > 2) {
            send("msg2");
        }
        new S15();
    }

    public void start() {
        update();
        new S13();
    }

    public void stop() {
        send("msg3");
    }

    public void tick() {
        new S07();
    }
}
