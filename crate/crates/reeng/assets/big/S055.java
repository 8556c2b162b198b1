public class S055 extends Abstract7 {
    public void open() {
        new S074();
    }

    public void close() {
        send("msg0");
    }

    public void start() {
        new S056();
        send("msg5");
    }

    public void stop() {
        send("msg0");
    }

    public void tick() {
        new S038();
    }

    public void reset() {
        new S072();
        send("msg5");
    }

    public void pause() {
        update();
        new S039();
    }

    public void resume() {
        if (counter > 9) {
            if (counter > 8) {
                new S021();
                if (counter > 8) {
                    new S023();
                } else {
                    new S067();
                }
            } else {
                new S090();
                send("msg1");
                try {
                    new S022();
                } catch (IllegalStateException e) {
                    send("msg7");
                    send("msg7");
                    log("trace");
                }
            }
            if (counter > 2) {
                update();
                try {
                    new S033();
                    new S012();
                    new S040();
                } catch (IllegalStateException e) {
                    update();
                    send("msg2");
                    send("msg3");
                }
            }
        }
        try {
            new S025();
            log("trace");
            try {
                new S031();
                try {
                    new S070();
                    send("msg4");
                    update();
                } catch (IOException e) {
                    new S054();
                    new S071();
                    send("msg1");
                } catch (TimeoutException e) {
                    send("msg1");
                    new S071();
                } finally {
                    new S046();
                    send("msg0");
                    log("trace");
                }
                new S076();
            } finally {
                new S047();
                send("msg0");
            }
        } catch (IllegalStateException e) {
            update();
            new S036();
        }
    }

    public void load() {
        try {
            switch (event) {
                case EV4:
                    switch (event) {
                        case EV1:
                            new S075();
                            send("msg5");
                            update();
                            break;
                        case EV4:
                            send("msg5");
                            send("msg3");
                            break;
                        case EV2:
                            log("trace");
                            break;
                    }
                    new S003();
                    if (counter > 8) {
                        send("msg7");
                        send("msg3");
                        send("msg6");
                    } else {
                        update();
                        log("trace");
                    }
                    break;
            }
        } catch (TimeoutException e) {
            switch (event) {
                case EV4:
                    log("trace");
                    send("msg1");
                    break;
                case EV5:
                    send("msg3");
                    break;
            }
            log("trace");
            update();
        }
    }

    public void save() {
        new S007();
        new S037();
    }
}
