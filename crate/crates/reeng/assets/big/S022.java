public class S022 extends State {
    public void open() {
        update();
        log("trace");
    }

    public void close() {
        log("trace");
        try {
            log("trace");
        } catch (IllegalStateException e) {
            send("msg5");
            send("msg1");
            new S031();
        }
        new S040();
    }

    public void start() {
        switch (event) {
            case EV1:
                new S097();
                log("trace");
                break;
            case EV5:
                send("msg0");
                send("msg5");
                break;
            case EV4:
                switch (event) {
                    case EV4:
                        switch (event) {
                            case EV4:
                                new S069();
                                break;
                            case EV1:
                                send("msg5");
                                break;
                            case EV5:
                                new S014();
                                break;
                        }
                        try {
                            update();
                        } finally {
                            new S057();
                            update();
                            update();
                        }
                        send("msg0");
                        break;
                    case EV1:
                        new S003();
                        new S018();
                        break;
                    case EV2:
                        new S073();
                        new S024();
                        switch (event) {
                            case EV1:
                                new S096();
                                break;
                            default:
                                new S081();
                                send("msg5");
                                break;
                        }
                        break;
                }
                update();
                break;
        }
        try {
            send("msg0");
            send("msg7");
        } catch (IOException e) {
            if (counter > 3) {
                send("msg4");
                send("msg3");
            } else {
                send("msg5");
            }
            try {
                send("msg0");
                switch (event) {
                    case EV5:
                        send("msg3");
                        new S076();
                        break;
                    case EV0:
                        send("msg0");
                        new S051();
                        break;
                }
            } catch (IOException e) {
                send("msg7");
                new Helper();
            } finally {
                switch (event) {
                    case EV1:
                        send("msg1");
                        new S079();
                        new S036();
                        break;
                    case EV3:
                        send("msg7");
                        send("msg2");
                        log("trace");
                        break;
                    case EV0:
                        send("msg7");
                        break;
                }
            }
        } catch (TimeoutException e) {
            update();
            send("msg5");
            new S039();
        } finally {
            switch (event) {
                case EV4:
                    send("msg3");
                    update();
                    new S045();
                    break;
                case EV1:
                    update();
                    send("msg1");
                    break;
            }
            try {
                if (counter > 8) {
                    new S064();
                    update();
                    new S088();
                }
                send("msg5");
            } catch (TimeoutException e) {
                switch (event) {
                    case EV0:
                        send("msg5");
                        new S013();
                        new S030();
                        break;
                }
                new S086();
                new S054();
            }
        }
    }

    public void stop() {
        switch (event) {
            case EV5:
                send("msg3");
                new S089();
                break;
        }
        send("msg3");
    }

    public void tick() {
        update();
        if (counter > 2) {
            new S086();
            send("msg4");
        }
        try {
            send("msg2");
        } finally {
            try {
                log("trace");
                new S007();
            } catch (TimeoutException e) {
                if (counter > 0) {
                    send("msg1");
                    new S023();
                }
                new S047();
            }
        }
    }

    public void reset() {
        new S052();
    }

    public void pause() {
        send("msg3");
        new S058();
        send("msg2");
    }

    public void resume() {
        update();
    }

    public void load() {
        new S089();
        update();
    }

    public void save() {
        new S007();
    }
}
