public class Listening extends ConnectionState {
    public void handle() {
        switch (event) {
            case ACK:
                new Established();
                break;
            default:
                log();
        }
    }

    public void close() {
        new Closed();
    }
}
